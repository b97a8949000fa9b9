"""Exact counting of additive representations by Piatetski-Shapiro sequences."""

from .exactfloor import (
    PsMembership,
    RationalExponent,
    floor_pow,
    is_ps_member,
    nth_root_floor,
    parse_alpha,
    phi,
)
from .counting import CountRecord, count_N3, count_N12, count_NAP, count_R, count_R_bruteforce
from .asymptotics import I_of_alpha, conjecture_rhs, constant_N3, leading_constant_R
from .witness import Representation, enumerate_representations, find_representation

__version__ = "0.1.0"
