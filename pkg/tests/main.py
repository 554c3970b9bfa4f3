import os
import sys
import unittest


if __name__ == '__main__':
    here = os.path.dirname(os.path.abspath(__file__))
    sys.path.insert(0, os.path.dirname(here))
    loader = unittest.TestLoader()
    tests = loader.discover(here, pattern="test_*.py")
    testRunner = unittest.runner.TextTestRunner(verbosity=2)
    result = testRunner.run(tests)
    sys.exit(0 if result.wasSuccessful() else 1)
