import dataclasses
import logging
import os

logger = logging.getLogger(__name__)

GEN_CAP_ENV = 'K_CONE_GEN_CAP'


@dataclasses.dataclass(frozen=True)
class Config:
    '''Settings shared by the library and the command line front end.'''
    generator_cap: int = 20
    latex: bool = False
    verify_seed: int = 20190417
    verify_jobs: int = 1

    def __post_init__(self):
        if self.generator_cap < 0:
            raise ValueError('generator_cap must be nonnegative')
        if self.verify_jobs < 1:
            raise ValueError('verify_jobs must be at least 1')

    @staticmethod
    def from_env(environ=None, **overrides):
        '''Build a Config, reading the optional generator cap override.'''
        environ = os.environ if environ is None else environ
        raw = environ.get(GEN_CAP_ENV)
        if raw is not None and 'generator_cap' not in overrides:
            try:
                overrides['generator_cap'] = int(raw)
            except ValueError:
                logger.warning('Ignoring %s=%r: not an integer.',
                               GEN_CAP_ENV, raw)
        return Config(**overrides)


DEFAULT_CONFIG = Config()

def resolve(config):
    return DEFAULT_CONFIG if config is None else config
