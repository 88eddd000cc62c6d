"""covercrimp - exact computations for finite covers of a disk, crimps and Hurwitz data"""

__version__ = "0.1.0"
