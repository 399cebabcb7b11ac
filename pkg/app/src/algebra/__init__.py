from app.src.algebra.scalar import Scalar, MultiplicationCounter, mul
from app.src.algebra.gamma import GammaMonomial, GammaMultivector
from app.src.algebra.efb import EfbSymbol, EfbElement, EfbMultivector

__all__ = [
    "Scalar",
    "MultiplicationCounter",
    "mul",
    "GammaMonomial",
    "GammaMultivector",
    "EfbSymbol",
    "EfbElement",
    "EfbMultivector",
]
