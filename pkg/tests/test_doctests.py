"""Run the inline doctest examples of the core modules."""

import doctest

import heckehom.laurent
import heckehom.weyl
import heckehom.hecke
import heckehom.hh0
import heckehom.exprparse


def test_doctests():
    for module in (
        heckehom.laurent,
        heckehom.weyl,
        heckehom.hecke,
        heckehom.hh0,
        heckehom.exprparse,
    ):
        failures, tested = doctest.testmod(module, verbose=False)
        assert failures == 0, module.__name__
        assert tested > 0, module.__name__
