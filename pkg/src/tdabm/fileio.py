"""Atomic file writes: temp file in the target directory, then rename."""

from __future__ import annotations

import os
import tempfile


def write_bytes(path, data: bytes) -> None:
    path = os.fspath(path)
    target_dir = os.path.dirname(path) or "."
    fd, tmp = tempfile.mkstemp(prefix=".tdabm-", dir=target_dir)
    try:
        with os.fdopen(fd, "wb") as fh:
            fh.write(data)
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise


def write_text(path, text: str) -> None:
    write_bytes(path, text.encode("utf-8"))
