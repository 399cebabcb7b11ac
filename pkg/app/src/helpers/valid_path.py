from pathlib import Path
import os


def validate_input_file(path: str) -> bool:
    """
    Validate a graph file path for the current OS.
    Returns True if the path names an existing regular file.
    """
    if not path or "\0" in path:
        return False

    try:
        p = Path(path).expanduser()
    except Exception:
        return False

    # Colon is only valid right after a drive letter
    if os.name == "nt" and any(":" in part for part in p.parts[1:]):
        return False

    return p.is_file()
