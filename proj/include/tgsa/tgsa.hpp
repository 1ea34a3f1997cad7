#pragma once

// Umbrella header for the TGSA library: tokenizing overlap-only annotated
// documents, building the two-relational parent-child / overlap graph,
// validating it, and answering structural queries via pre-post indexes.

#include "tgsa/common.hpp"
#include "tgsa/construct.hpp"
#include "tgsa/graph.hpp"
#include "tgsa/oracle.hpp"
#include "tgsa/prepost.hpp"
#include "tgsa/token.hpp"
#include "tgsa/tokenize.hpp"
#include "tgsa/validate.hpp"
