"""Simultaneous bar-cores, CSYDs and doubled distinct cores: enumeration, bijections, counts."""
from .partitions import CoreFamily, Partition, StrictPartition

__version__ = "0.1.0"

__all__ = ["CoreFamily", "Partition", "StrictPartition", "__version__"]
