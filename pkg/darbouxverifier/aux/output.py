import csv
import io
import json
import math
import sys
import numpy as np

SCHEMA_VERSION = 1
CSV_COLUMNS = ("cells", "lo", "hi", "width")


def to_plain(value):
    """Turns numpy scalars and containers into JSON-ready values; non-finite floats become strings."""
    if isinstance(value, dict):
        return {str(k): to_plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, np.ndarray)):
        return [to_plain(v) for v in value]
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        value = float(value)
        return value if math.isfinite(value) else repr(value)
    return value


def format_json(payload):
    document = dict(to_plain(payload), schema=SCHEMA_VERSION)
    return json.dumps(document, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def format_csv(rows):
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        writer.writerow([to_plain(row[column]) for column in CSV_COLUMNS])
    return buffer.getvalue()


def enclosure_row(enclosure):
    return {
        "cells": enclosure.cells,
        "lo": enclosure.lo,
        "hi": enclosure.hi,
        "width": enclosure.width,
    }


def write_artifact(text, output=None):
    if output is None:
        sys.stdout.write(text)
        sys.stdout.flush()
    else:
        with open(output, mode="w", encoding="UTF-8", newline="") as output_file:
            output_file.write(text)


def emit(payload, rows, output=None, output_format="json"):
    """Writes `payload` as JSON, or `rows` as CSV."""
    if output_format == "csv":
        write_artifact(format_csv(rows), output)
    else:
        write_artifact(format_json(payload), output)
