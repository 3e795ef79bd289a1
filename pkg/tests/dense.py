"""
Dense n^d x n^d matrices of the Schur-Weyl representation, small n and d only.
"""
import itertools
from fractions import Fraction

import numpy as np

from haarpy.group_algebra import AlgebraElement, matrix_units
from haarpy.schur_weyl import act_on_index
from haarpy.tableaux import Permutation, partitions


def basis(n: int, d: int):
    return list(itertools.product(range(1, n + 1), repeat=d))


def dense_permutation(sigma: Permutation, n: int) -> np.ndarray:
    indices = basis(n, len(sigma))
    position = {index: a for a, index in enumerate(indices)}
    matrix = np.zeros((len(indices), len(indices)), dtype=object)
    matrix[:, :] = Fraction(0)
    for index in indices:
        matrix[position[act_on_index(sigma, index)], position[index]] = Fraction(1)
    return matrix


def dense(x: AlgebraElement, n: int) -> np.ndarray:
    size = n ** x.degree
    matrix = np.zeros((size, size), dtype=object)
    matrix[:, :] = Fraction(0)
    for sigma, coefficient in x.items():
        matrix = matrix + dense_permutation(sigma, n) * coefficient
    return matrix


def hilbert_schmidt(a: np.ndarray, b: np.ndarray) -> Fraction:
    """Tr(a* b) for real matrices"""
    return sum((a * b).flatten().tolist(), Fraction(0))


def entry(matrix: np.ndarray, n: int, row, col) -> Fraction:
    position = {index: a for a, index in enumerate(basis(n, len(row)))}
    return matrix[position[tuple(row)], position[tuple(col)]]


def unit_matrices(n: int, d: int):
    """(p(E~), ||p(E~)||^2) for every unit not killed at this n"""
    result = []
    for shape in partitions(d):
        for unit in matrix_units(shape):
            matrix = dense(unit.element, n)
            norm = hilbert_schmidt(matrix, matrix)
            if norm:
                result.append((matrix, norm))
    return result


def project_elementary(units, n: int, row, col) -> np.ndarray:
    """orthogonal projection of e_{row,col} onto the commutant spanned by `units`"""
    position = {index: a for a, index in enumerate(basis(n, len(row)))}
    a, b = position[tuple(row)], position[tuple(col)]
    size = len(position)
    result = np.zeros((size, size), dtype=object)
    result[:, :] = Fraction(0)
    for matrix, norm in units:
        # <p(E~), e_{row,col}> is a single entry
        if matrix[a, b]:
            result = result + matrix * (matrix[a, b] / norm)
    return result
