import time


class DeadlineExceeded(RuntimeError):
    """An algorithm noticed that its cooperative deadline has passed."""


def check_deadline(deadline):
    """Raise if ``deadline`` (a ``time.perf_counter`` value or None) has passed."""
    if deadline is not None and time.perf_counter() >= deadline:
        raise DeadlineExceeded("deadline exceeded")
