# Baselines Module
# Brute-force oracle and global-candidate reference matchers

from .global_candidate import global_candidate_match
from .oracle import oracle_enumerate

__all__ = ['global_candidate_match', 'oracle_enumerate']
