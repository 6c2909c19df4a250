from .test_arith import TestArith
from .test_weierstrass import TestWeierstrass
from .test_net import TestNet
from .test_propagate import TestPropagate
from .test_seeds import TestSeeds
from .test_transform import TestTransform
from .test_recover import TestRecover
from .test_cli import TestCli

__all__ = ['TestArith', 'TestWeierstrass', 'TestNet', 'TestPropagate', 'TestSeeds',
           'TestTransform', 'TestRecover', 'TestCli']
