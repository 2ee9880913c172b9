#pragma once

#include "kollar/alpha.hpp"
#include "kollar/catalog.hpp"
#include "kollar/component.hpp"
#include "kollar/discrepancy.hpp"
#include "kollar/dual_graph.hpp"
#include "kollar/errors.hpp"
#include "kollar/hirzebruch_jung.hpp"
#include "kollar/lattice.hpp"
#include "kollar/rational.hpp"
#include "kollar/serialize.hpp"
