#include "hopper/io.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace hopper {

using nlohmann::json;

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw IoError("read failed: " + path);
    return ss.str();
}

void write_text_file_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot open file for writing: " + tmp);
        out << content;
        out.flush();
        if (!out) {
            std::remove(tmp.c_str());
            throw IoError("write failed: " + tmp);
        }
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw IoError("cannot move output into place: " + path);
    }
}

std::string float12(double v) {
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

namespace {

Int parse_int_value(const json& v, const char* what) {
    if (v.is_number_integer()) return Int(v.get<long long>());
    if (v.is_string()) {
        try {
            return Int(v.get<std::string>());
        } catch (const std::exception&) {
            throw IoError(std::string("bad integer string for ") + what);
        }
    }
    throw IoError(std::string("expected an integer (or integer string) for ") + what);
}

json int_to_json(const Int& v) {
    static const Int lo = std::numeric_limits<long long>::min();
    static const Int hi = std::numeric_limits<long long>::max();
    if (v >= lo && v <= hi) return json(v.convert_to<long long>());
    return json(v.str());
}

std::string rat_to_string(const Rat& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

}  // namespace

Configuration parse_config_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw IoError(std::string("configuration is not valid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("dim") || !j.contains("backend") || !j.contains("points"))
        throw IoError("configuration JSON needs \"dim\", \"backend\", and \"points\"");
    const int dim = j["dim"].is_number_integer() ? j["dim"].get<int>() : -1;
    if (dim < 1) throw IoError("configuration \"dim\" must be a positive integer");
    const json& pts = j["points"];
    if (!pts.is_array() || pts.size() < 2)
        throw IoError("configuration \"points\" must list at least two pieces");

    const json& backend = j["backend"];
    if (backend.is_string() && backend.get<std::string>() == "rational") {
        std::vector<std::vector<Rat>> coords;
        for (const json& p : pts) {
            if (!p.is_array() || static_cast<int>(p.size()) != dim)
                throw IoError("each rational point must be an array of dim entries");
            std::vector<Rat> v;
            for (const json& x : p) {
                if (x.is_string()) {
                    try {
                        v.emplace_back(x.get<std::string>());
                    } catch (const std::exception&) {
                        throw IoError("bad rational \"p/q\" string: " + x.get<std::string>());
                    }
                } else if (x.is_number_integer()) {
                    v.emplace_back(x.get<long long>());
                } else {
                    throw IoError("rational coordinates must be \"p/q\" strings");
                }
            }
            coords.push_back(std::move(v));
        }
        return Configuration::rational(dim, std::move(coords));
    }
    if (backend.is_object() && backend.contains("cyclotomic")) {
        const int order = backend["cyclotomic"].is_number_integer()
                              ? backend["cyclotomic"].get<int>()
                              : -1;
        if (order < 1) throw IoError("\"cyclotomic\" order must be a positive integer");
        if (dim != 2) throw IoError("cyclotomic backend requires dim = 2");
        std::vector<Cyc> coords;
        for (const json& p : pts) {
            if (!p.is_array()) throw IoError("each cyclotomic point must be a coefficient array");
            Cyc z(order);
            long k = 0;
            for (const json& x : p)
                z += Cyc::zeta_pow(order, k++) * parse_int_value(x, "cyclotomic coefficient");
            coords.push_back(std::move(z));
        }
        return Configuration::cyclotomic(order, std::move(coords));
    }
    throw IoError("configuration \"backend\" must be \"rational\" or {\"cyclotomic\": N}");
}

std::string config_to_json(const Configuration& c) {
    json j;
    j["dim"] = c.dim();
    json pts = json::array();
    if (c.backend() == Backend::Rational) {
        j["backend"] = "rational";
        for (const auto& p : c.rat_points()) {
            json row = json::array();
            for (const Rat& x : p) row.push_back(rat_to_string(x));
            pts.push_back(std::move(row));
        }
    } else {
        j["backend"] = json{{"cyclotomic", c.cyc_order()}};
        for (const Cyc& z : c.cyc_points()) {
            json row = json::array();
            for (const Int& x : z.coeffs()) row.push_back(int_to_json(x));
            pts.push_back(std::move(row));
        }
    }
    j["points"] = std::move(pts);
    return j.dump(2) + "\n";
}

IntMatrix parse_matrix_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw IoError(std::string("matrix is not valid JSON: ") + e.what());
    }
    if (!j.is_array() || j.empty()) throw IoError("matrix JSON must be a non-empty array of rows");
    const int n = static_cast<int>(j.size());
    IntMatrix m(n);
    for (int r = 0; r < n; ++r) {
        const json& row = j[static_cast<size_t>(r)];
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw IoError("matrix JSON must be square");
        for (int c = 0; c < n; ++c)
            m.at(r, c) = parse_int_value(row[static_cast<size_t>(c)], "matrix entry");
    }
    return m;
}

std::string matrix_to_json(const IntMatrix& m) {
    json rows = json::array();
    for (int r = 0; r < m.n(); ++r) {
        json row = json::array();
        for (int c = 0; c < m.n(); ++c) row.push_back(int_to_json(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows.dump() + "\n";
}

std::string plan_to_json(const EnlargementPlan& p) {
    json j;
    j["N"] = p.N;
    j["i"] = p.i;
    j["k"] = p.k;
    j["t"] = p.t;
    j["matrix"] = json::parse(matrix_to_json(p.a_matrix));
    j["jumps"] = format_jumps(p.jumps);
    j["scale_float"] = std::stod(float12(p.scale_float()));
    j["rotation_steps"] = p.rotation_steps;
    return j.dump(2) + "\n";
}

std::string search_report_to_json(const SearchReport& r) {
    json j;
    j["found"] = r.found.has_value();
    if (r.found) j["sequence"] = format_jumps(*r.found);
    j["nodes_expanded"] = r.nodes_expanded;
    j["depth_reached"] = r.depth_reached;
    j["exhaustive"] = r.exhaustive;
    return j.dump(2) + "\n";
}

namespace {

std::pair<double, double> to_xy(const Configuration& c, int piece) {
    if (c.backend() == Backend::Cyclotomic) {
        const std::complex<double> z = c.cyc_pos(piece).embed();
        return {z.real(), z.imag()};
    }
    const auto& p = c.rat_pos(piece);
    const double x = static_cast<double>(p[0]);
    const double y = c.dim() >= 2 ? static_cast<double>(p[1]) : 0.0;
    return {x, y};
}

std::string poly_points(const std::vector<std::pair<double, double>>& pts) {
    std::ostringstream os;
    for (size_t i = 0; i < pts.size(); ++i) {
        if (i) os << ' ';
        os << float12(pts[i].first) << ',' << float12(pts[i].second);
    }
    return os.str();
}

}  // namespace

std::string render_svg(const Configuration& start, const JumpSequence& s) {
    if (start.backend() == Backend::Rational && start.dim() > 2)
        throw std::invalid_argument("render: only planar configurations are drawable");
    const int N = start.pieces();

    std::vector<std::pair<double, double>> start_pts, final_pts;
    for (int p = 0; p < N; ++p) start_pts.push_back(to_xy(start, p));

    struct Arrow {
        double x1, y1, x2, y2;
    };
    std::vector<Arrow> arrows;
    Configuration cur = start;
    for (const Jump& jmp : s) {
        const auto from = to_xy(cur, jmp.mover);
        cur = apply_jump(cur, jmp);
        const auto to = to_xy(cur, jmp.mover);
        arrows.push_back({from.first, from.second, to.first, to.second});
    }
    for (int p = 0; p < N; ++p) final_pts.push_back(to_xy(cur, p));

    double xmin = start_pts[0].first, xmax = xmin, ymin = start_pts[0].second, ymax = ymin;
    auto cover = [&](double x, double y) {
        xmin = std::min(xmin, x);
        xmax = std::max(xmax, x);
        ymin = std::min(ymin, y);
        ymax = std::max(ymax, y);
    };
    for (const auto& [x, y] : start_pts) cover(x, y);
    for (const auto& [x, y] : final_pts) cover(x, y);
    for (const Arrow& a : arrows) {
        cover(a.x1, a.y1);
        cover(a.x2, a.y2);
    }
    double span = std::max(xmax - xmin, ymax - ymin);
    if (span <= 0) span = 1.0;
    const double margin = 0.05 * span;
    const double w = (xmax - xmin) + 2 * margin, h = (ymax - ymin) + 2 * margin;
    const double stroke = span / 200.0;

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << float12(xmin - margin) << ' '
        << float12(-(ymax + margin)) << ' ' << float12(w) << ' ' << float12(h) << "\">\n";
    svg << "<defs><marker id=\"tip\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" "
           "markerWidth=\"6\" markerHeight=\"6\" orient=\"auto-start-reverse\">"
           "<path d=\"M 0 0 L 10 5 L 0 10 z\" fill=\"#9467bd\"/></marker></defs>\n";
    // y axis flipped so the picture matches math orientation
    svg << "<g transform=\"scale(1,-1)\">\n";
    svg << "<polygon class=\"start\" points=\"" << poly_points(start_pts)
        << "\" fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"" << float12(stroke) << "\"/>\n";
    for (const Arrow& a : arrows)
        svg << "<line x1=\"" << float12(a.x1) << "\" y1=\"" << float12(a.y1) << "\" x2=\""
            << float12(a.x2) << "\" y2=\"" << float12(a.y2)
            << "\" stroke=\"#9467bd\" stroke-width=\"" << float12(stroke * 0.6)
            << "\" marker-end=\"url(#tip)\"/>\n";
    if (!s.empty())
        svg << "<polygon class=\"final\" points=\"" << poly_points(final_pts)
            << "\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"" << float12(stroke) << "\"/>\n";
    for (const auto& [x, y] : start_pts)
        svg << "<circle cx=\"" << float12(x) << "\" cy=\"" << float12(y) << "\" r=\""
            << float12(stroke * 2.5) << "\" fill=\"#1f77b4\"/>\n";
    svg << "</g>\n</svg>\n";
    return svg.str();
}

}  // namespace hopper
