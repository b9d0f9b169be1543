#ifndef DOMENUM_DOMENUM_HPP
#define DOMENUM_DOMENUM_HPP

#include "domenum/antichain.hpp"
#include "domenum/chordal.hpp"
#include "domenum/clique_tree.hpp"
#include "domenum/enumerator.hpp"
#include "domenum/errors.hpp"
#include "domenum/extension.hpp"
#include "domenum/generators.hpp"
#include "domenum/graph.hpp"
#include "domenum/io.hpp"
#include "domenum/vertex_set.hpp"

#endif  // DOMENUM_DOMENUM_HPP
