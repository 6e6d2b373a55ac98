"""
Sparse-triplet text format for assembled matrices:

    rows cols nnz
    i j value
    ...
"""


import logging
import os
from typing import Union

import numpy as np
import scipy.sparse

from src.core.errors import ContractViolation

log = logging.getLogger("main.oracle.triplets")

Matrix = Union[np.ndarray, scipy.sparse.spmatrix]


def dump_triplets(matrix: Matrix, path: str) -> int:
    coo = scipy.sparse.coo_matrix(matrix)
    coo.sum_duplicates()
    coo.eliminate_zeros()

    directory = os.path.dirname(path)

    if directory:
        os.makedirs(directory, exist_ok=True)

    with open(path, "w") as f:
        f.write(f"{coo.shape[0]} {coo.shape[1]} {coo.nnz}\n")

        for i, j, value in zip(coo.row, coo.col, coo.data):
            f.write(f"{i} {j} {float(value)!r}\n")

    log.info(f"Dumped {coo.shape[0]}x{coo.shape[1]} matrix with {coo.nnz} entries to {path}")

    return coo.nnz


def load_triplets(path: str) -> scipy.sparse.csr_matrix:
    with open(path, "r") as f:
        lines = [line.split() for line in f if line.strip()]

    if not lines or len(lines[0]) != 3:
        raise ContractViolation(f"{path}: missing 'rows cols nnz' header")

    rows, cols, nnz = (int(i) for i in lines[0])
    entries = lines[1:]

    if len(entries) != nnz or any(len(i) != 3 for i in entries):
        raise ContractViolation(f"{path}: header announces {nnz} entries, found {len(entries)}")

    row = np.array([int(i[0]) for i in entries], dtype=np.int64)
    col = np.array([int(i[1]) for i in entries], dtype=np.int64)
    data = np.array([float(i[2]) for i in entries])

    return scipy.sparse.coo_matrix((data, (row, col)), shape=(rows, cols)).tocsr()
