import os

from hypothesis import HealthCheck, settings

settings.register_profile(
    'kcones', deadline=None,
    suppress_health_check=[HealthCheck.too_slow])
settings.register_profile('ci', parent=settings.get_profile('kcones'),
                          max_examples=200)
settings.load_profile(os.environ.get('HYPOTHESIS_PROFILE', 'kcones'))
