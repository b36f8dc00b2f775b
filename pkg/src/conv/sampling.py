"""Sample sets: quasi-uniform generic points plus every distinguished stratum."""
from typing import List

from src.config import DEFAULT_SAMPLES, DEFAULT_SEED
from src.spaces.base import SpaceModel
from src.spaces.types import BasePoint


def stratified_samples(model: SpaceModel, n: int = DEFAULT_SAMPLES, seed: int = DEFAULT_SEED) -> List[BasePoint]:
    seen, samples = set(), []
    for x in model.sample_bases(n, seed) + model.strata():
        if x not in seen:
            seen.add(x)
            samples.append(x)
    return samples
