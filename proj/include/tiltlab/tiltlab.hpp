#pragma once

#include "tiltlab/error.hpp"
#include "tiltlab/field.hpp"
#include "tiltlab/linalg.hpp"
#include "tiltlab/quiver.hpp"
#include "tiltlab/algebra.hpp"
#include "tiltlab/serialize.hpp"
#include "tiltlab/fixtures.hpp"
#include "tiltlab/brauer.hpp"
#include "tiltlab/complex.hpp"
#include "tiltlab/homotopy.hpp"
#include "tiltlab/mutation.hpp"
#include "tiltlab/endalgebra.hpp"
#include "tiltlab/crystal.hpp"
#include "tiltlab/decomp.hpp"
#include "tiltlab/wild.hpp"
#include "tiltlab/reproduce.hpp"
