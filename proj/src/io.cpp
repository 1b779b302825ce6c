#include "fourdir/io.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace fourdir {

using nlohmann::json;

MaskDocument make_mask_document(const SchemeSymbol& s) {
    MaskDocument doc;
    doc.family = family_name(s.family);
    doc.n = s.n;
    doc.l = s.l;
    doc.mu = s.mu;
    doc.matrix = symbol_to_mask(s.poly);
    doc.support = support_of(s.poly).octagon;
    return doc;
}

std::string mask_document_to_json(const MaskDocument& doc) {
    json j;
    j["family"] = doc.family;
    j["params"]["n"] = doc.n;
    j["params"]["l"] = doc.l;
    json mu = json::array();
    for (const auto& m : doc.mu) mu.push_back(rat_to_string(m));
    j["params"]["mu"] = mu;
    j["denominator"] = doc.matrix.denominator.get_str();
    j["offset"] = {doc.matrix.offset.first, doc.matrix.offset.second};
    json rows = json::array();
    for (const auto& row : doc.matrix.rows) {
        json r = json::array();
        for (const auto& v : row) r.push_back(v.get_str());
        rows.push_back(r);
    }
    j["rows"] = rows;
    j["support"] = {{"m", doc.support.m}, {"n", doc.support.n}, {"l", doc.support.l}};
    return j.dump(2) + "\n";
}

MaskDocument mask_document_from_json(const std::string& text) {
    const json j = json::parse(text);
    MaskDocument doc;
    doc.family = j.at("family").get<std::string>();
    doc.n = j.at("params").at("n").get<long>();
    doc.l = j.at("params").at("l").get<long>();
    for (const auto& m : j.at("params").at("mu"))
        doc.mu.push_back(rat_from_string(m.get<std::string>()));
    doc.matrix.denominator = Integer(j.at("denominator").get<std::string>());
    doc.matrix.offset = {j.at("offset").at(0).get<long>(), j.at("offset").at(1).get<long>()};
    size_t width = 0;
    for (const auto& row : j.at("rows")) {
        std::vector<Integer> r;
        for (const auto& v : row) r.emplace_back(v.get<std::string>());
        if (doc.matrix.rows.empty()) width = r.size();
        else if (r.size() != width)
            throw std::invalid_argument("ragged mask rows");
        doc.matrix.rows.push_back(std::move(r));
    }
    if (doc.matrix.rows.empty())
        throw std::invalid_argument("mask document without rows");
    doc.support.m = j.at("support").at("m").get<long>();
    doc.support.n = j.at("support").at("n").get<long>();
    doc.support.l = j.at("support").at("l").get<long>();
    return doc;
}

std::string format_mask_matrix(const MaskMatrix& m) {
    size_t width = 0;
    for (const auto& row : m.rows)
        for (const auto& v : row) width = std::max(width, v.get_str().size());
    std::ostringstream os;
    os << "1/" << m.denominator.get_str() << " *\n";
    for (const auto& row : m.rows) {
        os << "[";
        for (size_t c = 0; c < row.size(); ++c)
            os << (c ? " " : "") << std::setw((int)width) << row[c].get_str();
        os << "]\n";
    }
    return os.str();
}

std::string format_mask_csv(const MaskMatrix& m) {
    std::ostringstream os;
    os << "# denominator," << m.denominator.get_str() << "\n";
    os << "# offset," << m.offset.first << "," << m.offset.second << "\n";
    for (const auto& row : m.rows) {
        for (size_t c = 0; c < row.size(); ++c)
            os << (c ? "," : "") << row[c].get_str();
        os << "\n";
    }
    return os.str();
}

void write_grid_csv(std::ostream& os, const GridFunction& g) {
    os << "# level," << g.level << "\n";
    os << "# window," << g.window.x0 << "," << g.window.x1 << ","
       << g.window.y0 << "," << g.window.y1 << "\n";
    os << "alpha1,alpha2,value\n";
    for (long y = g.window.y0; y <= g.window.y1; ++y)
        for (long x = g.window.x0; x <= g.window.x1; ++x)
            os << x << "," << y << "," << rat_to_string(g.at(x, y)) << "\n";
}

GridFunction read_grid_csv(std::istream& is) {
    GridFunction g;
    bool have_window = false;
    std::string line;
    long minx = 0, maxx = 0, miny = 0, maxy = 0;
    bool any = false;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (line.rfind("# level,", 0) == 0) {
            g.level = std::stol(line.substr(8));
            continue;
        }
        if (line.rfind("# window,", 0) == 0) {
            std::istringstream ss(line.substr(9));
            char comma;
            if (!(ss >> g.window.x0 >> comma >> g.window.x1 >> comma >>
                  g.window.y0 >> comma >> g.window.y1))
                throw std::invalid_argument("malformed window line: " + line);
            have_window = true;
            continue;
        }
        if (line[0] == '#' || line.rfind("alpha1", 0) == 0) continue;
        std::istringstream ss(line);
        std::string sx, sy, sv;
        if (!std::getline(ss, sx, ',') || !std::getline(ss, sy, ',') ||
            !std::getline(ss, sv))
            throw std::invalid_argument("malformed grid row: " + line);
        const long x = std::stol(sx), y = std::stol(sy);
        const Rational v = rat_from_string(sv);
        if (v != 0) g.values.emplace(std::make_pair(x, y), v);
        if (!any) {
            minx = maxx = x;
            miny = maxy = y;
            any = true;
        } else {
            minx = std::min(minx, x);
            maxx = std::max(maxx, x);
            miny = std::min(miny, y);
            maxy = std::max(maxy, y);
        }
    }
    if (!have_window) {
        if (!any) throw std::invalid_argument("empty grid file");
        g.window = {minx, maxx, miny, maxy};
    }
    return g;
}

void write_grid_pgm(const std::string& path, const GridFunction& g) {
    Rational lo(0), hi(0);
    bool first = true;
    for (long y = g.window.y0; y <= g.window.y1; ++y)
        for (long x = g.window.x0; x <= g.window.x1; ++x) {
            const Rational v = g.at(x, y);
            if (first) {
                lo = hi = v;
                first = false;
            } else {
                if (v < lo) lo = v;
                if (v > hi) hi = v;
            }
        }
    const Rational span = hi - lo;

    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open " + path);
    const long w = g.window.x1 - g.window.x0 + 1;
    const long h = g.window.y1 - g.window.y0 + 1;
    os << "P5\n" << w << " " << h << "\n65535\n";
    for (long y = g.window.y1; y >= g.window.y0; --y)
        for (long x = g.window.x0; x <= g.window.x1; ++x) {
            unsigned value = 0;
            if (span != 0) {
                Rational t = (g.at(x, y) - lo) * 65535 / span;
                t.canonicalize();
                // round to nearest
                Integer num = t.get_num(), den = t.get_den(), q;
                mpz_fdiv_q(q.get_mpz_t(),
                           Integer(2 * num + den).get_mpz_t(),
                           Integer(2 * den).get_mpz_t());
                value = (unsigned)q.get_ui();
            }
            os.put((char)((value >> 8) & 0xff));
            os.put((char)(value & 0xff));
        }
    if (!os) throw std::runtime_error("failed writing " + path);

    std::ofstream sidecar(path + ".norm.txt");
    if (!sidecar) throw std::runtime_error("cannot open " + path + ".norm.txt");
    sidecar << "min " << rat_to_string(lo) << "\n";
    sidecar << "max " << rat_to_string(hi) << "\n";
}

}  // namespace fourdir
