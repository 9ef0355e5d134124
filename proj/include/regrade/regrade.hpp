#pragma once

#include "regrade/commands.hpp"
#include "regrade/functors.hpp"
#include "regrade/hilbert.hpp"
#include "regrade/matrix.hpp"
#include "regrade/path.hpp"
#include "regrade/quiver.hpp"
#include "regrade/random.hpp"
#include "regrade/representation.hpp"
#include "regrade/scalar.hpp"
#include "regrade/split.hpp"
#include "regrade/text_format.hpp"
#include "regrade/verify.hpp"
