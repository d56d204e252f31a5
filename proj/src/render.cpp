#include <algorithm>
#include <sstream>

#include "monogen/render.hpp"

namespace monogen {

namespace {

// svg styling
constexpr int kCell = 20;
constexpr int kGap = 6;
constexpr int kMargin = 24;
constexpr const char* kFill = "#7f7f7f";
constexpr const char* kStroke = "#000000";
constexpr const char* kEmpty = "#ffffff";

}  // namespace

std::string render_ascii(const Complex& k) {
    std::ostringstream os;
    const int width = static_cast<int>(std::to_string(k.n() - 1).size());
    for (int v = 0; v < k.n(); ++v) {
        std::string label = std::to_string(v);
        os << std::string(static_cast<std::size_t>(width) - label.size(), ' ') << label << " |";
        for (const auto& s : k.maximal()) os << ' ' << (s.contains(v) ? '#' : '.');
        os << '\n';
    }
    return os.str();
}

std::string render_svg(const Complex& k) {
    const int cols = static_cast<int>(k.size());
    const int w = 2 * kMargin + cols * (kCell + kGap);
    const int h = 2 * kMargin + k.n() * kCell;
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\" viewBox=\"0 0 " << w
       << ' ' << h << "\">\n";
    for (int v = 0; v < k.n(); ++v)
        os << "  <text x=\"" << kMargin - 6 << "\" y=\"" << kMargin + v * kCell + kCell * 3 / 4
           << "\" font-family=\"monospace\" font-size=\"12\" text-anchor=\"end\">" << v << "</text>\n";
    for (int c = 0; c < cols; ++c) {
        const auto& s = k.maximal()[static_cast<std::size_t>(c)];
        const int x = kMargin + kGap / 2 + c * (kCell + kGap);
        for (int v = 0; v < k.n(); ++v)
            os << "  <rect x=\"" << x << "\" y=\"" << kMargin + v * kCell << "\" width=\"" << kCell << "\" height=\""
               << kCell << "\" fill=\"" << (s.contains(v) ? kFill : kEmpty) << "\" stroke=\"" << kStroke
               << "\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

std::string render_ascii(const VisibilityDiagram& d, const std::vector<std::string>& input_names) {
    std::size_t width = 1;
    for (const auto& s : input_names) width = std::max(width, s.size());
    std::ostringstream os;
    os << "   ";
    for (const auto& s : input_names) os << ' ' << std::string(width - s.size(), ' ') << s;
    os << '\n';
    for (int i = 0; i < d.out_n; ++i) {
        const std::string label = std::to_string(i);
        os << std::string(label.size() < 2 ? 2 - label.size() : 0, ' ') << label << " |";
        for (int j = 0; j < d.in_n; ++j) os << ' ' << std::string(width - 1, ' ') << (d.at(i, j) ? '#' : '.');
        os << '\n';
    }
    return os.str();
}

}  // namespace monogen
