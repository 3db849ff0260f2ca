"""Example of checking announcements on a model and reducing them."""

from apaltools.checker.truth_sets import truth_set
from apaltools.loaders.corpus.load_corpus import load_model_m1
from apaltools.models.bisimulation import bisim_quotient
from apaltools.rewrite.reduction import format_trace, reduce_to_epistemic
from apaltools.syntax.parser import parse

if __name__ == "__main__":
    m1 = load_model_m1()

    # a learns p once it is announced, and some announcement lets a learn p
    for text in ["K a p", "<p> K a p", "dia K a p"]:
        print(text, m1.sorted_worlds(truth_set(m1, parse(text))))

    print(bisim_quotient(m1).blocks)
    print(format_trace(reduce_to_epistemic(parse("[p] K a q"))))
