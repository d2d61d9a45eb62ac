#include "corrclass/rng.hpp"

// Header-only; this translation unit pins the header into the build.
