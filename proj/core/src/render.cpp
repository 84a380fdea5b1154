#include "tsys/render.hpp"

#include <algorithm>
#include <sstream>

namespace tsys {

std::string render_ascii(const TransferSystem& sys) {
  std::ostringstream out;
  out << "nodes:";
  for (int i = 1; i <= sys.size(); ++i) out << ' ' << i;
  out << '\n';
  for (int i = 1; i <= sys.size(); ++i) {
    bool any = false;
    for (int j = i + 1; j <= sys.size(); ++j) {
      if (!sys.has(i, j)) continue;
      if (!any) out << i << " ->";
      any = true;
      out << ' ' << j;
    }
    if (any) out << '\n';
  }
  return out.str();
}

std::string render_svg(const TransferSystem& sys) {
  constexpr int unit = 40;    // horizontal distance between nodes
  constexpr int margin = 30;  // left/right padding
  constexpr int top_pad = 20;
  const int n = sys.size();
  auto x = [](int i) { return margin + (i - 1) * unit; };

  int max_radius = 0;
  for (const auto& [i, j] : sys.relations())
    if (j - i > 1) max_radius = std::max(max_radius, (j - i) * unit / 2);
  const int baseline = top_pad + max_radius;
  const int width = n > 0 ? 2 * margin + (n - 1) * unit : 2 * margin;
  const int height = baseline + 40;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
      << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  out << "<g stroke=\"black\" stroke-width=\"2\" fill=\"none\">\n";
  for (const auto& [i, j] : sys.relations())
    if (j - i == 1)
      out << "<line x1=\"" << x(i) << "\" y1=\"" << baseline << "\" x2=\"" << x(j)
          << "\" y2=\"" << baseline << "\"/>\n";
  for (const auto& [i, j] : sys.relations())
    if (j - i > 1) {
      int radius = (j - i) * unit / 2;  // arc height is half the span
      out << "<path d=\"M " << x(i) << ' ' << baseline << " A " << radius << ' ' << radius
          << " 0 0 1 " << x(j) << ' ' << baseline << "\"/>\n";
    }
  out << "</g>\n";
  out << "<g fill=\"black\">\n";
  for (int i = 1; i <= n; ++i)
    out << "<circle cx=\"" << x(i) << "\" cy=\"" << baseline << "\" r=\"3\"/>\n";
  out << "</g>\n";
  out << "<g font-family=\"monospace\" font-size=\"12\" text-anchor=\"middle\">\n";
  for (int i = 1; i <= n; ++i)
    out << "<text x=\"" << x(i) << "\" y=\"" << baseline + 20 << "\">" << i << "</text>\n";
  out << "</g>\n";
  out << "</svg>\n";
  return out.str();
}

}  // namespace tsys
