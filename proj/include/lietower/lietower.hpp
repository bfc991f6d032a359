#pragma once

#include "lietower/rational.hpp"
#include "lietower/matrix.hpp"
#include "lietower/polynomial.hpp"
#include "lietower/root.hpp"
#include "lietower/root_system.hpp"
#include "lietower/chevalley.hpp"
#include "lietower/parabolic.hpp"
#include "lietower/decomposition.hpp"
#include "lietower/basis_lemma.hpp"
#include "lietower/characters.hpp"
#include "lietower/omega.hpp"
#include "lietower/workspace.hpp"
#include "lietower/report.hpp"
#include "lietower/golden.hpp"
#include "lietower/verify.hpp"
