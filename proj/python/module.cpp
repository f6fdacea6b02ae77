// Python bindings; filled in once the core library is complete.
#include <pybind11/pybind11.h>

PYBIND11_MODULE(_mopuc, m) { m.doc() = "matrix OPUC toolkit"; }
