"""Virtual K-theory and Chow theory of P(1,n)."""
from .ring import (VirtualKRing, build_virtual_k, bott_class, periodicity_check,
                   ordinary_algebra, classical_aug, untwisted_power)
