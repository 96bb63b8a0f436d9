"""Maximal cyclic modules V(lam) of the small quantum group of type A_n, with exact checks."""

from .cyclotomic import CyclotomicField, PrimeField, cyclotomic_field, qbinom, qint, specialize_v1
from .djmm import build_module, build_module_fp, dimension, dual_module, reduce_mod_p
from .root_data import f_primitive_index, steinberg_test

__version__ = "0.1.0"

__all__ = [
    "CyclotomicField",
    "PrimeField",
    "build_module",
    "build_module_fp",
    "cyclotomic_field",
    "dimension",
    "dual_module",
    "f_primitive_index",
    "qbinom",
    "qint",
    "reduce_mod_p",
    "specialize_v1",
    "steinberg_test",
]
