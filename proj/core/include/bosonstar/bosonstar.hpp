#pragma once

#include "bosonstar/analysis.hpp"
#include "bosonstar/dynamics.hpp"
#include "bosonstar/energetics.hpp"
#include "bosonstar/errors.hpp"
#include "bosonstar/field.hpp"
#include "bosonstar/field_io.hpp"
#include "bosonstar/grid.hpp"
#include "bosonstar/linearization.hpp"
#include "bosonstar/operators.hpp"
#include "bosonstar/serialization.hpp"
#include "bosonstar/solver.hpp"
#include "bosonstar/transform.hpp"
