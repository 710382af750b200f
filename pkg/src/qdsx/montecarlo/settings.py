from .. import Conf, ConfField


class MonteCarloConf(Conf):
    """Execution settings of the Monte Carlo engine."""

    workers = ConfField(env="QDSX_WORKERS", toml="workers", default=1, type=int)
    chunk_size = ConfField(env="QDSX_CHUNK_SIZE", toml="chunk-size", default=64, type=int)


MONTECARLO = MonteCarloConf()


__all__ = ["MonteCarloConf", "MONTECARLO"]
