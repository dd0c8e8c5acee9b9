#pragma once

#include "alcove/apartment.hpp"
#include "alcove/cartan.hpp"
#include "alcove/distance.hpp"
#include "alcove/errors.hpp"
#include "alcove/growth.hpp"
#include "alcove/moyprasad.hpp"
#include "alcove/point.hpp"
#include "alcove/qpoly.hpp"
#include "alcove/rational.hpp"
#include "alcove/serialize.hpp"
