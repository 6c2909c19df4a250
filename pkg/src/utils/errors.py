# src/utils/errors.py

from typing import Optional, Sequence


def format_index(index: Optional[Sequence[int]]) -> str:
    if index is None:
        return "?"
    return "(" + ",".join(str(c) for c in index) + ")"


class EllNetError(Exception):
    """Error de dominio de la biblioteca"""
    exit_code = 2


# ========== ARITMÉTICA EXACTA ==========

class DivisionByZero(EllNetError, ZeroDivisionError):
    pass


class MixedFields(EllNetError, TypeError):
    pass


class ParseError(EllNetError, ValueError):
    pass


class InvalidModulus(EllNetError, ValueError):
    pass


# ========== CURVAS ==========

class SingularCurve(EllNetError):
    pass


class SingularPointOnCurve(EllNetError):
    pass


class PointNotOnCurve(EllNetError):
    pass


class NotAppropriate(EllNetError):
    def __init__(self, reason: str, detail: str = ""):
        self.reason = reason
        message = f"puntos no apropiados: {reason}"
        if detail:
            message += f" ({detail})"
        super().__init__(message)


# ========== REDES ==========

class RankMismatch(EllNetError):
    pass


class IndexOverflow(EllNetError):
    pass


class MissingTerm(EllNetError):
    def __init__(self, index: Sequence[int]):
        self.index = tuple(index)
        super().__init__(f"término ausente W{format_index(self.index)}")


class DegenerateNet(EllNetError):
    def __init__(self, message: str, index: Optional[Sequence[int]] = None):
        self.index = tuple(index) if index is not None else None
        super().__init__(message)


class NotNormalised(EllNetError):
    pass


class InsufficientOverlap(EllNetError):
    pass


class InconsistentNet(EllNetError):
    pass


class CharacteristicTwo(EllNetError):
    pass


# ========== PROPAGACIÓN ==========

class UnderspecifiedSeeds(EllNetError):
    def __init__(self, missing: Sequence[Sequence[int]]):
        self.missing = [tuple(v) for v in missing]
        listed = ", ".join(f"W{format_index(v)}" for v in self.missing)
        super().__init__(f"faltan semillas: {listed}")


class DegenerateSeeds(EllNetError):
    def __init__(self, divisor: Optional[Sequence[int]], index: Optional[Sequence[int]] = None,
                 message: Optional[str] = None):
        self.divisor = tuple(divisor) if divisor is not None else None
        self.index = tuple(index) if index is not None else None
        if message is None:
            message = f"W{format_index(self.divisor)} = 0"
            if self.index is not None:
                message += f" al calcular W{format_index(self.index)}"
        super().__init__(message)


class Char2PathUnavailable(EllNetError):
    pass


class SearchExhausted(EllNetError):
    def __init__(self, target: Sequence[int], bound: int):
        self.target = tuple(target)
        self.bound = bound
        super().__init__(f"sin instancia para W{format_index(self.target)} con cota {bound}")


class NoUsableDirection(EllNetError):
    def __init__(self, index: Sequence[int]):
        self.index = tuple(index)
        super().__init__(f"ninguna dirección utilizable para W{format_index(self.index)}")


class SeedLiftFailure(EllNetError):
    def __init__(self, index: Sequence[int]):
        self.index = tuple(index)
        super().__init__(f"no se pudo levantar W{format_index(self.index)}")


# ========== VERIFICACIÓN ==========

class VerificationFailure(EllNetError):
    exit_code = 3


__all__ = [
    'EllNetError', 'DivisionByZero', 'MixedFields', 'ParseError', 'InvalidModulus',
    'SingularCurve', 'SingularPointOnCurve', 'PointNotOnCurve', 'NotAppropriate',
    'RankMismatch', 'IndexOverflow', 'MissingTerm', 'DegenerateNet', 'NotNormalised',
    'InsufficientOverlap', 'InconsistentNet', 'CharacteristicTwo', 'UnderspecifiedSeeds',
    'DegenerateSeeds', 'Char2PathUnavailable', 'SearchExhausted', 'NoUsableDirection',
    'SeedLiftFailure', 'VerificationFailure', 'format_index',
]

