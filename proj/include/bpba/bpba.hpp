#pragma once

#include "bpba/aba.hpp"
#include "bpba/cba.hpp"
#include "bpba/contraction.hpp"
#include "bpba/error.hpp"
#include "bpba/lattice.hpp"
#include "bpba/matrix.hpp"
#include "bpba/monodromy.hpp"
#include "bpba/quantum.hpp"
#include "bpba/rational.hpp"
#include "bpba/serialize.hpp"
#include "bpba/verify.hpp"
#include "bpba/weights.hpp"
