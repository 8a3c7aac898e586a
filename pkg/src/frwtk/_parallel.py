"""Thread-pool map capped by the FRWTK_THREADS environment variable."""
import os
from concurrent.futures import ThreadPoolExecutor


def max_workers():
    env = os.environ.get("FRWTK_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return os.cpu_count() or 1


def pmap(func, items):
    """Order-preserving map; runs serially for one worker or one item."""
    items = list(items)
    n = min(max_workers(), len(items))
    if n <= 1:
        return [func(x) for x in items]
    with ThreadPoolExecutor(max_workers=n) as pool:
        return list(pool.map(func, items))
