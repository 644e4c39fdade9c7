#pragma once

// Enumerative invariants assembled from diagrams and markings, plus the
// recursion and closed-form oracles that cross-check them.

#include <functional>
#include <vector>

#include "floordiag/arith.hpp"
#include "floordiag/diagram.hpp"
#include "floordiag/enumeration.hpp"

namespace floordiag {

// Worker threads for per-diagram sums. Defaults to FLOORDIAG_THREADS, else
// the hardware concurrency.
unsigned worker_threads();
void set_worker_threads(unsigned threads);

// Σ f(item) over `items`, evaluated on worker threads; the result does not
// depend on the thread count.
BigInt parallel_sum(const std::vector<FloorDiagram>& items, const std::function<BigInt(const FloorDiagram&)>& f);

// N_{d,g}.
BigInt gw(int d, int g);
// N^{d,δ}, counting reducible curves too.
BigInt severi(int d, int delta);
// N^{d,δ} rebuilt from connected invariants over all splittings of the point set.
BigInt severi_split_oracle(int d, int delta);
// N_{d,g}(λ,ρ).
BigInt relative_gw(int d, int g, const Partition& lambda, const Partition& rho);
// W_d.
BigInt welschinger(int d);
// N_{d,0} through Kontsevich's recursion.
BigInt kontsevich_oracle(int d);

BigInt closed_form_gmax(int d, const Partition& lambda, const Partition& rho);
BigInt closed_form_uninodal(int d, const Partition& lambda, const Partition& rho);
BigInt collinear_triple(int d, int g);

struct TangencyAtPoint {
  // μ-weighted ordinary markings whose last k elements are sinks of one floor.
  BigInt filtered_markings;
  // relative_gw(d, g, (k), ⟨1^{d-k}⟩).
  BigInt relative;
};
TangencyAtPoint tangency_at_point(int d, int g, int k);
// μ-weighted ordinary markings whose last k elements are sinks.
BigInt terminal_sink_sum(int d, int g, int k);

}  // namespace floordiag
