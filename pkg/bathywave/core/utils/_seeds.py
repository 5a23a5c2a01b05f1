import numpy as np


def derive_seed(seed: int, index: int, n_streams: int = 1):
    """Seeds of the independent random streams of item ``index`` of a seeded collection.

    The item seed is ``seed ^ index``; it is expanded through :class:`numpy.random.SeedSequence`
    into ``n_streams`` child seeds so that streams of one item never share draws.

    Args:
        seed (int): seed of the collection, an unsigned 64-bit integer.
        index (int): position of the item in the collection.
        n_streams (int, optional): number of child seeds. Defaults to ``1``.

    Returns:
        list: ``n_streams`` Python integers.
    """
    children = np.random.SeedSequence(int(seed) ^ int(index)).spawn(n_streams)
    return [int(c.generate_state(1, dtype=np.uint64)[0]) for c in children]
