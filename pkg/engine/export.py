# export.py - CSV / JSON formatting shared by the table and estimate writers.
# All numbers go out as 7-decimal fixed point, the precision of the published tables.

import csv
import io
import json
import logging
import os

logger = logging.getLogger(__name__)

DECIMALS = 7


def fixed(value):
    """7-decimal fixed point; None becomes an empty field."""
    if value is None:
        return ""
    return f"{value:.{DECIMALS}f}"


def to_csv(header, rows):
    """Render header + rows as CSV text with '\\n' line endings."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def parse_csv(text):
    """Read CSV text back into (header, rows of strings)."""
    reader = csv.reader(io.StringIO(text))
    rows = list(reader)
    return rows[0], rows[1:]


def to_json(data):
    """UTF-8 JSON with keys in insertion order."""
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"


def write_output(text, path):
    """Write text to path (creating parent directories), or return it when path is None."""
    if path is None:
        return text
    parent = os.path.dirname(os.path.abspath(path))
    os.makedirs(parent, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="") as f:
        f.write(text)
    logger.info("wrote %s", path)
    return text
