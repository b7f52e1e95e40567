#pragma once

#include "entring/group_action.hpp"
#include "entring/hilbert.hpp"
#include "entring/invariants.hpp"
#include "entring/io.hpp"
#include "entring/parallel.hpp"
#include "entring/positivity.hpp"
#include "entring/rng.hpp"
#include "entring/states.hpp"
#include "entring/su_basis.hpp"
#include "entring/verify.hpp"
