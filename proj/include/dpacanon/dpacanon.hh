// dpacanon.hh -- umbrella header

#ifndef DPACANON_DPACANON_HH
#define DPACANON_DPACANON_HH

#include <dpacanon/automaton.hh>
#include <dpacanon/canonicalize.hh>
#include <dpacanon/graph.hh>
#include <dpacanon/io.hh>
#include <dpacanon/natural_color.hh>
#include <dpacanon/random.hh>

#endif
