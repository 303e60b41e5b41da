#ifndef RAMAPI_CATALOG_HPP
#define RAMAPI_CATALOG_HPP

#include <string>
#include <vector>

#include "ramapi/series.hpp"
#include "ramapi/transform.hpp"

namespace ramapi {

struct CatalogMetadata {
    std::string source;
    std::string version;
};

// Parsed and validated catalog: transformation definitions plus series rows.
struct CatalogFile {
    CatalogMetadata meta;
    std::vector<Transformation> transformations;
    std::vector<SeriesSpec> series;

    const SeriesSpec* find_series(const std::string& key) const;         // name or alias
    const Transformation* find_transformation(const std::string& name) const;
    const Transformation* find_transformation(int ell, int d) const;
};

// Line-oriented sectioned text with [meta] / [transformation] / [series]
// blocks of `key = literal` pairs.  With validate set, every transformation
// is checked numerically (F(alpha(x)) = m(x) F(beta(x)) at sample points) and
// every series row's invariants are enforced.
CatalogFile parse_catalog(const std::string& text, const PrecisionPolicy& p,
                          bool validate = true);
CatalogFile load_catalog(const std::string& path, const PrecisionPolicy& p,
                         bool validate = true);

// Canonical re-rendering; parse(format(c)) reproduces c structurally.
std::string format_catalog(const CatalogFile& c);

// The built-in catalog: the four series tables (36 rows) and the level-2
// degree-1/5 transformation.
const std::string& default_catalog_text();
CatalogFile default_catalog(const PrecisionPolicy& p, bool validate = true);

} // namespace ramapi

#endif
