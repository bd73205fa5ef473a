from .random_instances import *
