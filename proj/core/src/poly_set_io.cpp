#include "dynirr/poly_set_io.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <sstream>

#include "dynirr/error.hpp"

namespace dynirr {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    const auto start = s.find_first_not_of(" \t", pos);
    if (start == std::string_view::npos) break;
    const auto end = std::min(s.find_first_of(" \t", start), s.size());
    out.push_back(s.substr(start, end - start));
    pos = end;
  }
  return out;
}

std::uint32_t parse_u32(std::string_view tok, std::size_t line, std::string_view what) {
  std::uint32_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(ErrorCode::ParseError, line,
                     "malformed " + std::string(what) + " '" + std::string(tok) + "'");
  }
  return v;
}

std::vector<Coeff> parse_modulus(std::string_view tok, std::size_t line) {
  std::vector<Coeff> out;
  std::size_t pos = 0;
  while (true) {
    const auto end = std::min(tok.find(':', pos), tok.size());
    out.push_back(parse_u32(tok.substr(pos, end - pos), line, "modulus coefficient"));
    if (end == tok.size()) break;
    pos = end + 1;
  }
  return out;
}

FieldCtx parse_header(std::string_view text, std::size_t line, bool& defaulted) {
  std::optional<std::uint32_t> p, d;
  std::optional<std::vector<Coeff>> modulus;
  for (auto tok : split_ws(text)) {
    const auto eq = tok.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError(ErrorCode::ParseError, line, "unexpected header token '" + std::string(tok) + "'");
    }
    const auto key = tok.substr(0, eq);
    const auto value = tok.substr(eq + 1);
    if (key == "p" && !p) {
      p = parse_u32(value, line, "p");
    } else if (key == "d" && !d) {
      d = parse_u32(value, line, "d");
    } else if (key == "modulus" && !modulus) {
      modulus = parse_modulus(value, line);
    } else {
      throw ParseError(ErrorCode::ParseError, line, "unexpected header token '" + std::string(tok) + "'");
    }
  }
  if (!p || !d) throw ParseError(ErrorCode::ParseError, line, "header needs p=<int> d=<int>");
  try {
    if (*d == 1 && !modulus) return FieldCtx::prime(*p);
    if (!modulus) {
      defaulted = true;
      return FieldCtx::with_default_modulus(*p, *d);
    }
    return FieldCtx(*p, *d, std::move(*modulus));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.code(), line, e.detail());
  }
}

MonicQuad parse_quad(const FieldCtx& ctx, std::string_view text, std::size_t line) {
  const auto toks = split_ws(text);
  if (toks.size() != 2 || toks[0].substr(0, 2) != "b=" || toks[1].substr(0, 2) != "c=") {
    throw ParseError(ErrorCode::ParseError, line,
                     "expected 'b=<elem> c=<elem>', got '" + std::string(text) + "'");
  }
  try {
    return MonicQuad{parse_element(ctx, toks[0].substr(2)), parse_element(ctx, toks[1].substr(2))};
  } catch (const Error& e) {
    throw ParseError(e.code(), line, e.detail());
  }
}

}  // namespace

ParsedPolySet parse_poly_set(std::string_view text) {
  ParsedPolySet out;
  std::optional<FieldCtx> ctx;
  std::vector<MonicQuad> polys;
  std::vector<std::size_t> poly_lines;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = std::min(text.find('\n', pos), text.size());
    const auto line = trim(text.substr(pos, nl - pos));
    ++line_no;
    pos = nl + 1;
    if (line.empty() || line.front() == '#') {
      if (nl == text.size()) break;
      continue;
    }
    if (!ctx) {
      ctx.emplace(parse_header(line, line_no, out.modulus_defaulted));
    } else {
      polys.push_back(parse_quad(*ctx, line, line_no));
      poly_lines.push_back(line_no);
    }
    if (nl == text.size()) break;
  }
  if (!ctx) throw ParseError(ErrorCode::ParseError, line_no, "missing field header");

  out.instance = DISetInstance::make(std::make_shared<const FieldCtx>(std::move(*ctx)), polys);
  if (!out.instance.dropped_duplicates.empty()) {
    std::vector<MonicQuad> seen;
    for (std::size_t k = 0; k < polys.size(); ++k) {
      if (std::find(seen.begin(), seen.end(), polys[k]) != seen.end()) {
        out.diagnostics.push_back("line " + std::to_string(poly_lines[k]) +
                                  ": duplicate polynomial " + format_quad(polys[k]) + " dropped");
      } else {
        seen.push_back(polys[k]);
      }
    }
  }
  return out;
}

std::string format_quad(const MonicQuad& f) {
  return "b=" + format_element(f.b) + " c=" + format_element(f.c);
}

std::string emit_poly_set(const DISetInstance& inst, std::span<const std::string> comments) {
  std::ostringstream os;
  os << inst.ctx->header() << '\n';
  for (const auto& c : comments) os << "# " << c << '\n';
  for (const auto& f : inst.polys) os << format_quad(f) << '\n';
  return os.str();
}

}  // namespace dynirr
