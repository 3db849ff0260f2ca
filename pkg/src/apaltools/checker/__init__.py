"""Model checking for formulas with announcements and box."""
