"""
This test suite implements the tests for the module :mod:`analysis`.

"""
