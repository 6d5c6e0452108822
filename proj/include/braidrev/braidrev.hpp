#pragma once

#include "braidrev/b3rep.hpp"
#include "braidrev/braid.hpp"
#include "braidrev/classify.hpp"
#include "braidrev/cyc.hpp"
#include "braidrev/error.hpp"
#include "braidrev/families.hpp"
#include "braidrev/linalg.hpp"
#include "braidrev/matrix.hpp"
#include "braidrev/poly.hpp"
#include "braidrev/quiver.hpp"
#include "braidrev/random.hpp"
#include "braidrev/rational.hpp"
