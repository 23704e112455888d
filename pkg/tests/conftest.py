import os

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from lrpoly.partitions import Partition, partitions_up_to

settings.register_profile(
    "default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.register_profile("ci", deadline=None, max_examples=200, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def partitions(max_weight: int = 4) -> st.SearchStrategy[Partition]:
    return st.sampled_from(partitions_up_to(max_weight))


def nonempty_partitions(max_weight: int = 4) -> st.SearchStrategy[Partition]:
    return st.sampled_from(partitions_up_to(max_weight)[1:])
