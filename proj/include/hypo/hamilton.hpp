#ifndef HYPO_HAMILTON_HPP
#define HYPO_HAMILTON_HPP

#include "hypo/graph.hpp"

namespace hypo {

// Exact hamiltonian-cycle decision.
bool is_hamiltonian(const Graph& g);

// True iff g - v is hamiltonian for every vertex v.
bool is_hypocyclic(const Graph& g);

// True iff g is non-hamiltonian and hypocyclic.
bool is_hypohamiltonian(const Graph& g);

}  // namespace hypo

#endif
