"""
Módulo de curvas de Weierstrass
"""

from .weierstrass import CurvePoint, INFINITY, WeierstrassCurve, find_unihomothety

__all__ = ['CurvePoint', 'INFINITY', 'WeierstrassCurve', 'find_unihomothety']
