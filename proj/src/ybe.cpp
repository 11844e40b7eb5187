#include "qlie/basis.hpp"
