from fractions import Fraction
from math import comb
from lerchlib.util import config
from lerchlib.util.errors import CapExceeded

# B_0, B_2, B_4, ... grown on demand; the table never shrinks.
_even_bernoulli = [Fraction(1)]

def _extend_even_bernoulli(m_max):
    for m in range(len(_even_bernoulli), m_max + 1):
        n = 2 * m
        total = Fraction(n + 1) * Fraction(-1, 2)
        for j in range(m):
            total += comb(n + 1, 2 * j) * _even_bernoulli[j]

        _even_bernoulli.append(-total / (n + 1))

def bernoulli_even(k):
    '''
    Gets the exact Bernoulli number B_2k from the binomial recurrence
    sum_{r=0}^{n} C(n+1, r) B_r = 0, using only even indices.
    '''
    if k < 0:
        raise ValueError("k must be >= 0")

    if k > config.bernoulli_cap:
        raise CapExceeded(f"B_{2 * k} is beyond the configured cap of B_{2 * config.bernoulli_cap}")

    if k >= len(_even_bernoulli):
        _extend_even_bernoulli(k)

    return _even_bernoulli[k]

def bernoulli_numbers(n_max):
    '''
    Exact Bernoulli numbers B_0 .. B_(2*n_max) as Fractions, with B_1 = -1/2.

    Arguments:
    'n_max' -- half the highest index to return; must not exceed the
        configured bernoulli_cap.
    '''
    if n_max < 0:
        raise ValueError("n_max must be >= 0")

    bernoulli_even(n_max)
    numbers = []
    for n in range(2 * n_max + 1):
        if n == 1:
            numbers.append(Fraction(-1, 2))
        elif n % 2:
            numbers.append(Fraction(0))
        else:
            numbers.append(_even_bernoulli[n // 2])

    return numbers
