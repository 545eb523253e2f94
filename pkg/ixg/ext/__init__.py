from ixg.ext import svg
