#include "ramapi/catalog.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "ramapi/errors.hpp"

namespace ramapi {

const SeriesSpec* CatalogFile::find_series(const std::string& key) const {
    for (const auto& s : series)
        if (s.name == key || (!s.alias.empty() && s.alias == key)) return &s;
    return nullptr;
}

const Transformation* CatalogFile::find_transformation(const std::string& name) const {
    for (const auto& t : transformations)
        if (t.name == name) return &t;
    return nullptr;
}

const Transformation* CatalogFile::find_transformation(int ell, int d) const {
    for (const auto& t : transformations)
        if (t.level.ell == ell && t.degree_inverse == d) return &t;
    return nullptr;
}

namespace {

struct Block {
    std::string kind;
    int line;
    std::vector<std::pair<std::string, std::string>> kv;

    const std::string* get(const std::string& key) const {
        for (const auto& [k, v] : kv)
            if (k == key) return &v;
        return nullptr;
    }
    std::string require(const std::string& key) const {
        const std::string* v = get(key);
        if (!v)
            throw ParseError("[" + kind + "] block is missing key '" + key + "'", line);
        return *v;
    }
};

std::string strip(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<Block> split_blocks(const std::string& text) {
    std::vector<Block> blocks;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    Block* cur = nullptr;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = strip(raw);
        if (line.empty() || line[0] == '#') continue;
        if (line.front() == '[' && line.back() == ']') {
            blocks.push_back(Block{line.substr(1, line.size() - 2), lineno, {}});
            cur = &blocks.back();
            continue;
        }
        size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError("expected 'key = value' or a [section] header", lineno, 1);
        if (!cur) throw ParseError("key/value pair outside any section", lineno, 1);
        cur->kv.emplace_back(strip(line.substr(0, eq)), strip(line.substr(eq + 1)));
    }
    return blocks;
}

int parse_int(const std::string& v, int line) {
    try {
        size_t used = 0;
        int out = std::stoi(v, &used);
        if (used != v.size()) throw std::invalid_argument(v);
        return out;
    } catch (const std::exception&) {
        throw ParseError("expected an integer, got '" + v + "'", line);
    }
}

} // namespace

CatalogFile parse_catalog(const std::string& text, const PrecisionPolicy& p, bool validate) {
    CatalogFile cat;
    std::set<std::string> tnames, snames;

    for (const Block& blk : split_blocks(text)) {
        if (blk.kind == "meta") {
            if (const std::string* v = blk.get("source")) cat.meta.source = *v;
            if (const std::string* v = blk.get("version")) cat.meta.version = *v;
        } else if (blk.kind == "transformation") {
            Transformation t;
            t.name = blk.require("name");
            if (!tnames.insert(t.name).second)
                throw ValidationError("duplicate transformation name '" + t.name + "'");
            t.level = LevelParam::from_s(parse_int(blk.require("s"), blk.line));
            t.degree_inverse = parse_int(blk.require("d"), blk.line);
            if (t.degree_inverse < 1)
                throw ValidationError("transformation '" + t.name + "': d must be positive");
            t.alpha_of_x = parse_rational_function(blk.require("alpha"));
            t.beta_of_x = parse_rational_function(blk.require("beta"));
            t.m_squared_of_x = parse_rational_function(blk.require("m_squared"));
            cat.transformations.push_back(std::move(t));
        } else if (blk.kind == "series") {
            SeriesSpec s;
            s.name = blk.require("name");
            if (!snames.insert(s.name).second)
                throw ValidationError("duplicate series name '" + s.name + "'");
            if (const std::string* v = blk.get("alias")) {
                s.alias = *v;
                if (!snames.insert(s.alias).second)
                    throw ValidationError("duplicate series name '" + s.alias + "'");
            }
            s.level = LevelParam::from_s(parse_int(blk.require("s"), blk.line));
            s.d = parse_int(blk.require("d"), blk.line);
            s.z = parse_real_surd(blk.require("z"));
            s.a = parse_real_surd(blk.require("a"));
            s.b = parse_real_surd(blk.require("b"));
            validate_series_spec(s);
            cat.series.push_back(std::move(s));
        } else {
            throw ParseError("unknown section [" + blk.kind + "]", blk.line, 1);
        }
    }

    if (validate) {
        BigReal tol = BigReal::pow10(5 - p.target_digits, p.working_bits());
        for (auto& t : cat.transformations) {
            BigReal worst = validate_transformation(t, p);
            if (!(worst < tol))
                throw ValidationError("transformation '" + t.name +
                                      "' fails F(alpha(x)) = m(x) F(beta(x)); residual " +
                                      worst.str(6));
        }
    }
    return cat;
}

CatalogFile load_catalog(const std::string& path, const PrecisionPolicy& p, bool validate) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open catalog '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_catalog(buf.str(), p, validate);
}

std::string format_catalog(const CatalogFile& c) {
    std::ostringstream out;
    out << "[meta]\n";
    if (!c.meta.source.empty()) out << "source = " << c.meta.source << "\n";
    if (!c.meta.version.empty()) out << "version = " << c.meta.version << "\n";
    for (const auto& t : c.transformations) {
        out << "\n[transformation]\n";
        out << "name = " << t.name << "\n";
        out << "s = " << t.level.s << "\n";
        out << "d = " << t.degree_inverse << "\n";
        out << "alpha = " << t.alpha_of_x.str() << "\n";
        out << "beta = " << t.beta_of_x.str() << "\n";
        out << "m_squared = " << t.m_squared_of_x.str() << "\n";
    }
    for (const auto& s : c.series) {
        out << "\n[series]\n";
        out << "name = " << s.name << "\n";
        if (!s.alias.empty()) out << "alias = " << s.alias << "\n";
        out << "s = " << s.level.s << "\n";
        if (s.d) out << "d = " << *s.d << "\n";
        out << "z = " << s.z.str() << "\n";
        out << "a = " << s.a.str() << "\n";
        out << "b = " << s.b.str() << "\n";
    }
    return out.str();
}

CatalogFile default_catalog(const PrecisionPolicy& p, bool validate) {
    return parse_catalog(default_catalog_text(), p, validate);
}

} // namespace ramapi
