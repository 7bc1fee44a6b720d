#pragma once

#include "indeque/bitset.hpp"
#include "indeque/blocks.hpp"
#include "indeque/coloring.hpp"
#include "indeque/errors.hpp"
#include "indeque/exact.hpp"
#include "indeque/forest.hpp"
#include "indeque/generators.hpp"
#include "indeque/graph.hpp"
#include "indeque/io.hpp"
#include "indeque/pathwidth2.hpp"
#include "indeque/verify.hpp"
