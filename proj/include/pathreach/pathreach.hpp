#pragma once
#ifndef PATHREACH_PATHREACH_HPP
#define PATHREACH_PATHREACH_HPP

#include "pathreach/dag_decompose.hpp"
#include "pathreach/decomposition.hpp"
#include "pathreach/digraph.hpp"
#include "pathreach/reach.hpp"
#include "pathreach/register_meter.hpp"

#endif  // PATHREACH_PATHREACH_HPP
