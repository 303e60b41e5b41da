#ifndef RAMAPI_PROVE_HPP
#define RAMAPI_PROVE_HPP

#include "ramapi/catalog.hpp"
#include "ramapi/certificate.hpp"

namespace ramapi {

struct ProveOptions {
    int dmax = 60;
    BranchPolicy branch;
};

// End-to-end run for one series: degree detection, transformation lookup,
// solution of beta = 1 - alpha, multiplier/derivative/G-transfer checks,
// coefficient derivation and comparison, Legendre reduction, direct series
// verification, and the modular q.  Failures are encoded in the verdict and
// notes, never thrown.
Certificate prove_series(const SeriesSpec& spec, const CatalogFile& catalog,
                         const PrecisionPolicy& p, const ProveOptions& opt = {});

} // namespace ramapi

#endif
