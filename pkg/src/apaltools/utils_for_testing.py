"""Utilites for testing."""

from io import StringIO

import pandas as pd

from apaltools.models.kripke import KripkeModel

RELATION_PREFIX = "rel_"


def str_to_model(string: str) -> KripkeModel:
    """Convert a table of worlds to a model.

    One row per world. The "world" column names it, each "rel_<agent>"
    column holds a block label (worlds with equal labels are
    indistinguishable for that agent) and every other column is an atom
    with 0/1 truth values.

    Args:
        string (str): A comma separated table, e.g.
            "world,rel_a,p\\nw,0,1\\nv,0,0".

    Returns:
        KripkeModel: The model, worlds in row order.
    """
    # Indented multi-line strings are allowed
    lines = [line.strip() for line in string.splitlines() if line.strip()]
    df = pd.read_table(StringIO("\n".join(lines)), sep=",", index_col=False, dtype={"world": str})

    relation_cols = [c for c in df.columns if c.startswith(RELATION_PREFIX)]
    atom_cols = [c for c in df.columns if c != "world" and c not in relation_cols]

    worlds = df["world"].tolist()
    agents = [c[len(RELATION_PREFIX) :] for c in relation_cols]
    relations = {
        col[len(RELATION_PREFIX) :]: [group["world"].tolist() for _, group in df.groupby(col, sort=False)]
        for col in relation_cols
    }
    valuation = {atom: df.loc[df[atom].astype(int) == 1, "world"].tolist() for atom in atom_cols}

    return KripkeModel(worlds=worlds, agents=agents, relations=relations, valuation=valuation)
