"""
Redes elípticas y cúbicas de Weierstrass
Biblioteca de aritmética exacta para pasar de curvas a redes y de redes a curvas
"""

__version__ = "1.0.0"
__author__ = "Eddy Bastidas"
