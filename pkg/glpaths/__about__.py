__project__ = "glpaths"
__author__ = "Maxim Millen & Minjie Zhu"
__version__ = "0.1.0"
__license__ = "MIT"
