#include "monocross/io.hpp"

#include <fstream>
#include <sstream>

namespace monocross {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << content;
    if (!out) throw std::runtime_error("write failure on '" + path + "'");
}

std::string strip_comment(const std::string& line) {
    auto hash = line.find('#');
    return hash == std::string::npos ? line : line.substr(0, hash);
}

}  // namespace

Drawing parse_point_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    long long n = -1;
    std::vector<Point> pts;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ss(strip_comment(line));
        std::string tok;
        if (n < 0) {
            if (!(ss >> tok)) continue;  // blank or comment before the header
            try {
                n = std::stoll(tok);
            } catch (const std::exception&) {
                throw ParseError("expected point count, got '" + tok + "'", line_no);
            }
            if (n < 1) throw ParseError("point count must be positive", line_no);
            std::string extra;
            if (ss >> extra) throw ParseError("trailing token '" + extra + "'", line_no);
            continue;
        }
        std::string xs, ys, extra;
        if (!(ss >> xs)) continue;
        if (!(ss >> ys)) throw ParseError("missing y coordinate", line_no);
        if (ss >> extra) throw ParseError("trailing token '" + extra + "'", line_no);
        if (static_cast<long long>(pts.size()) == n)
            throw ParseError("more than " + std::to_string(n) + " points", line_no);
        try {
            pts.push_back({parse_rational(xs), parse_rational(ys)});
        } catch (const std::exception& e) {
            throw ParseError(e.what(), line_no);
        }
    }
    if (n < 0) throw ParseError("empty point file", line_no);
    if (static_cast<long long>(pts.size()) != n)
        throw ParseError("expected " + std::to_string(n) + " points, got " +
                             std::to_string(pts.size()),
                         line_no);
    return Drawing::complete(std::move(pts));
}

Drawing read_point_text(const std::string& path) { return parse_point_text(read_file(path)); }

std::string format_point_text(const Drawing& d) {
    std::ostringstream out;
    out << d.size() << "\n";
    for (const auto& p : d.points())
        out << format_rational(p.x) << " " << format_rational(p.y) << "\n";
    return out.str();
}

void write_point_text(const Drawing& d, const std::string& path) {
    write_file(path, format_point_text(d));
}

Coloring read_coloring(const std::string& path, const Drawing& d) {
    std::istringstream in(read_file(path));
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string body = strip_comment(line);
        while (!body.empty() && (body.back() == '\r' || body.back() == ' ')) body.pop_back();
        if (body.empty()) continue;
        for (std::size_t i = 0; i < body.size(); ++i)
            if (body[i] != 'R' && body[i] != 'B')
                throw ParseError("illegal color character '" + std::string(1, body[i]) +
                                     "' at position " + std::to_string(i),
                                 line_no);
        if (static_cast<int>(body.size()) != d.edge_count())
            throw ParseError("coloring length " + std::to_string(body.size()) +
                                 " does not match edge count " + std::to_string(d.edge_count()),
                             line_no);
        return coloring_from_string(body);
    }
    throw ParseError("no coloring line found", line_no);
}

void write_coloring(const Coloring& chi, const std::string& path) {
    write_file(path, coloring_string(chi) + "\n");
}

HalvingMatching read_matching(const std::string& path, const Drawing& d) {
    std::istringstream in(read_file(path));
    std::string line;
    int line_no = 0;
    HalvingMatching m;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ss(strip_comment(line));
        long long u, v;
        if (!(ss >> u)) continue;
        if (!(ss >> v)) throw ParseError("matching line needs two vertices", line_no);
        int p = static_cast<int>(m.match.size());
        if (p >= d.size()) throw ParseError("more matching lines than points", line_no);
        if (u != p && v != p)
            throw ParseError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                 ") is not incident to point " + std::to_string(p),
                             line_no);
        try {
            m.match.push_back(d.edge_index(static_cast<int>(u), static_cast<int>(v)));
        } catch (const std::exception& e) {
            throw ParseError(e.what(), line_no);
        }
    }
    if (static_cast<int>(m.match.size()) != d.size())
        throw ParseError("expected one matching line per point", line_no);
    return m;
}

void write_matching(const HalvingMatching& m, const Drawing& d, const std::string& path) {
    std::ostringstream out;
    for (int e : m.match) {
        auto [u, v] = d.edges().at(e);
        out << u << " " << v << "\n";
    }
    write_file(path, out.str());
}

void read_order_type_db(const std::string& path, const DbOptions& opts,
                        const std::function<void(DbRecord&&)>& sink) {
    if (opts.width != 1 && opts.width != 2)
        throw std::invalid_argument("coordinate width must be 1 or 2 bytes");
    if (opts.n < 3) throw std::invalid_argument("need n >= 3");
    std::string data = read_file(path);
    const std::size_t stride = static_cast<std::size_t>(2) * opts.n * opts.width;
    if (data.size() % stride != 0)
        throw std::runtime_error("file size " + std::to_string(data.size()) +
                                 " is not a multiple of the record stride " +
                                 std::to_string(stride));
    auto value_at = [&](std::size_t off) -> long long {
        if (opts.width == 1) return static_cast<unsigned char>(data[off]);
        unsigned lo = static_cast<unsigned char>(data[off]);
        unsigned hi = static_cast<unsigned char>(data[off + 1]);
        return opts.big_endian ? (lo << 8) | hi : (hi << 8) | lo;
    };
    const std::size_t count = data.size() / stride;
    for (std::size_t r = 0; r < count; ++r) {
        std::vector<Point> pts;
        pts.reserve(opts.n);
        for (int i = 0; i < opts.n; ++i) {
            std::size_t off = r * stride + static_cast<std::size_t>(2) * i * opts.width;
            pts.push_back({Rational(value_at(off)), Rational(value_at(off + opts.width))});
        }
        DbRecord rec;
        rec.index = static_cast<int>(r);
        try {
            rec.drawing = Drawing::complete(std::move(pts));
        } catch (const GeneralPositionError& e) {
            if (!opts.permissive)
                throw std::runtime_error("record " + std::to_string(r) + ": " + e.what());
            rec.error = e.what();
        }
        sink(std::move(rec));
    }
}

std::vector<Drawing> read_order_type_db(const std::string& path, const DbOptions& opts) {
    std::vector<Drawing> out;
    read_order_type_db(path, opts, [&](DbRecord&& rec) {
        if (rec.drawing) out.push_back(std::move(*rec.drawing));
    });
    return out;
}

void write_order_type_db(const std::string& path, const std::vector<Drawing>& drawings,
                         const DbOptions& opts) {
    if (opts.width != 1 && opts.width != 2)
        throw std::invalid_argument("coordinate width must be 1 or 2 bytes");
    const long long cap = 1LL << (8 * opts.width);
    std::string data;
    for (const auto& d : drawings) {
        if (d.size() != opts.n) throw std::invalid_argument("drawing size differs from n");
        for (const auto& p : d.points()) {
            for (const Rational& c : {p.x, p.y}) {
                if (denominator(c) != 1 || numerator(c) < 0 || numerator(c) >= cap)
                    throw std::invalid_argument(
                        "coordinates must be integers in [0, 2^(8*width))");
                long long v = static_cast<long long>(numerator(c));
                if (opts.width == 1) {
                    data.push_back(static_cast<char>(v));
                } else if (opts.big_endian) {
                    data.push_back(static_cast<char>(v >> 8));
                    data.push_back(static_cast<char>(v & 0xff));
                } else {
                    data.push_back(static_cast<char>(v & 0xff));
                    data.push_back(static_cast<char>(v >> 8));
                }
            }
        }
    }
    write_file(path, data);
}

void render_svg(const Drawing& d, const Coloring* chi, const std::string& path) {
    if (chi && static_cast<int>(chi->size()) != d.edge_count())
        throw std::invalid_argument("coloring size does not match edge count");
    double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
    auto approx = [](const Rational& r) {
        return static_cast<double>(numerator(r)) / static_cast<double>(denominator(r));
    };
    for (int i = 0; i < d.size(); ++i) {
        double x = approx(d.point(i).x), y = approx(d.point(i).y);
        if (i == 0 || x < min_x) min_x = x;
        if (i == 0 || x > max_x) max_x = x;
        if (i == 0 || y < min_y) min_y = y;
        if (i == 0 || y > max_y) max_y = y;
    }
    double span = std::max({max_x - min_x, max_y - min_y, 1.0});
    double margin = span * 0.06;
    double scale = 1000.0 / (span + 2 * margin);
    auto sx = [&](double x) { return (x - min_x + margin) * scale; };
    auto sy = [&](double y) { return 1000.0 - (y - min_y + margin) * scale; };  // y up

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 1000 1000\">\n";
    for (int e = 0; e < d.edge_count(); ++e) {
        auto [u, v] = d.edges()[e];
        const char* stroke =
            chi ? ((*chi)[e] == Color::Red ? "#d62728" : "#1f77b4") : "#777777";
        out << "  <line x1=\"" << sx(approx(d.point(u).x)) << "\" y1=\""
            << sy(approx(d.point(u).y)) << "\" x2=\"" << sx(approx(d.point(v).x))
            << "\" y2=\"" << sy(approx(d.point(v).y)) << "\" stroke=\"" << stroke
            << "\" stroke-width=\"1.5\"/>\n";
    }
    for (int i = 0; i < d.size(); ++i) {
        double x = sx(approx(d.point(i).x)), y = sy(approx(d.point(i).y));
        out << "  <circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"5\" fill=\"#111\"/>\n";
        out << "  <text x=\"" << x + 7 << "\" y=\"" << y - 7 << "\" font-size=\"18\">" << i
            << "</text>\n";
    }
    out << "</svg>\n";
    write_file(path, out.str());
}

}  // namespace monocross
