from setuptools import setup, find_packages
import logging
logger = logging.getLogger(__name__)

version = '0.3.0'

try:
    with open('README.md', 'r') as f:
        long_desc = f.read()
except:
    logger.warning('Could not open README.md.  long_description will be set to None.')
    long_desc = None

setup(
    name = 'kcones',
    packages = find_packages(exclude=['tests']),
    version = version,
    description = 'Exact K-theoretic, motivic Chern and equivariant classes of subvarieties of projective space and of their projective and affine cones.',
    long_description = long_desc,
    long_description_content_type = 'text/markdown',
    keywords = ['K-theory', 'motivic Chern class', 'Hilbert series', 'equivariant', 'algebraic geometry'],
    classifiers = [
        'License :: OSI Approved :: MIT License',
        'Programming Language :: Python :: 3',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
    python_requires = '>=3.9',
    install_requires = [
        'sympy~=1.12',
        'numpy>=1.16',
    ],
    extras_require = {
        'test': [
            'pytest>=7',
            'hypothesis>=6',
        ],
        'all': [
            'pytest>=7',
            'hypothesis>=6',
        ],
    },
    entry_points = {
        'console_scripts': ['kcones=kcones.cli:main'],
    },
)
