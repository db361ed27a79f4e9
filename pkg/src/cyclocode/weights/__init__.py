from .enumerate import (EXTENDED_BUDGET, FAST_BUDGET, Enumeration, odd_even_min_weights, plan, tier_budget,
                        weight_distribution_direct, weight_enumeration)
from .macwilliams import krawtchouk, macwilliams_transform
from .report import WeightReport, distribution_csv, min_weight
from .search import random_codeword_upper_bound

__all__ = [
    "EXTENDED_BUDGET", "FAST_BUDGET", "Enumeration", "WeightReport", "distribution_csv", "krawtchouk",
    "macwilliams_transform", "min_weight", "odd_even_min_weights", "plan", "random_codeword_upper_bound",
    "tier_budget", "weight_distribution_direct", "weight_enumeration",
]
