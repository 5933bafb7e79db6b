from .rng import stream, stream_key
from .io import VERSION, read_csv, read_json, write_csv, write_json

__all__ = ["stream", "stream_key", "VERSION", "read_csv", "read_json", "write_csv", "write_json"]
