#include <cmath>
#include <filesystem>
#include <limits>
#include <numbers>
#include <sstream>

#include <gtest/gtest.h>

#include "pgreedy/errors.hpp"
#include "pgreedy/io.hpp"

namespace {

namespace io = pgreedy::io;
using pgreedy::Functional;
using pgreedy::FunctionalKind;
using pgreedy::Point;

TEST(FormatDouble, RoundTripsExactly) {
  for (double v : {0.0, -0.0, 1.0 / 3.0, 1e-300, 6.02214076e23, -std::numbers::pi}) {
    EXPECT_EQ(io::parse_double(io::format_double(v)), v);
  }
  EXPECT_TRUE(std::isnan(io::parse_double(io::format_double(std::numeric_limits<double>::quiet_NaN()))));
  EXPECT_EQ(io::parse_double(io::format_double(-std::numeric_limits<double>::infinity())),
            -std::numeric_limits<double>::infinity());
}

TEST(ParseDouble, Strict) {
  EXPECT_THROW((void)io::parse_double(""), pgreedy::FormatError);
  EXPECT_THROW((void)io::parse_double("1.5x"), pgreedy::FormatError);
  EXPECT_THROW((void)io::parse_double("abc"), pgreedy::FormatError);
  EXPECT_DOUBLE_EQ(io::parse_double("  2.5 "), 2.5);
}

TEST(Functionals, RoundTripWithCommentsAndWeights) {
  const std::vector<Functional> fs = {{FunctionalKind::DomainOpDelta, Point{0.1, -0.2}},
                                      {FunctionalKind::BoundaryDelta, Point{1.0 / 3.0, std::sqrt(8.0) / 3.0}}};
  std::stringstream ss;
  ss << "# header\n\n";
  io::write_functionals(ss, fs);
  const auto back = io::read_functionals(ss, pgreedy::FunctionalWeights{.domain = 3.0, .boundary = 2.0});
  ASSERT_EQ(back.size(), 2u);
  for (std::size_t i = 0; i < 2; ++i) {
    EXPECT_EQ(back[i].kind, fs[i].kind);
    EXPECT_EQ(back[i].point, fs[i].point);
  }
  EXPECT_EQ(back[0].weight, 3.0);
  EXPECT_EQ(back[1].weight, 2.0);
}

TEST(Functionals, MalformedLinesRejected) {
  for (const char* text : {"X 0 0\n", "D\n", "B 0 0 0 0\n", "D 0 zz\n"}) {
    std::istringstream is(text);
    EXPECT_THROW((void)io::read_functionals(is), pgreedy::FormatError) << text;
  }
}

TEST(Csv, RoundTripAndValidation) {
  io::CsvTable t{{"a", "b"}, {{"1", "2"}, {"3", ""}}};
  std::stringstream ss;
  io::write_csv(ss, t);
  const auto back = io::read_csv(ss);
  EXPECT_EQ(back.header, t.header);
  EXPECT_EQ(back.rows, t.rows);
  EXPECT_EQ(back.column("b"), 1u);
  EXPECT_THROW((void)back.column("c"), pgreedy::FormatError);
  EXPECT_EQ(io::CsvTable({{"x"}, {{"1"}, {"2.5"}}}).numeric_column("x"), (std::vector<double>{1.0, 2.5}));

  std::istringstream ragged("a,b\n1,2,3\n");
  EXPECT_THROW((void)io::read_csv(ragged), pgreedy::FormatError);
  std::istringstream empty("");
  EXPECT_THROW((void)io::read_csv(empty), pgreedy::FormatError);
}

TEST(Trace, RoundTripWithMissingRho) {
  pgreedy::RunTrace trace;
  for (std::size_t n = 1; n <= 5; ++n) {
    pgreedy::TraceRow r;
    r.n = n;
    r.sigma = 1.0 / static_cast<double>(n);
    if (n % 2 == 1) r.rho = 0.3 / static_cast<double>(n);
    r.kind = n == 2 ? FunctionalKind::BoundaryDelta : FunctionalKind::DomainOpDelta;
    r.h_domain = 0.1 * n;
    r.h_boundary = 0.2 * n;
    r.cond_c = 1.5 * n;
    trace.rows.push_back(r);
  }
  std::stringstream ss;
  io::write_csv(ss, io::trace_table(trace));
  const auto text = ss.str();
  EXPECT_EQ(text.substr(0, text.find('\n')), "N,sigma,rho,kind,h_domain,h_boundary,cond_C");
  const auto back = io::trace_from_table(io::read_csv(ss));
  ASSERT_EQ(back.rows.size(), 5u);
  for (std::size_t i = 0; i < 5; ++i) {
    EXPECT_EQ(back.rows[i].n, trace.rows[i].n);
    EXPECT_EQ(back.rows[i].sigma, trace.rows[i].sigma);
    EXPECT_EQ(back.rows[i].rho, trace.rows[i].rho);
    EXPECT_EQ(back.rows[i].kind, trace.rows[i].kind);
    EXPECT_EQ(back.rows[i].h_boundary, trace.rows[i].h_boundary);
    EXPECT_EQ(back.rows[i].cond_c, trace.rows[i].cond_c);
  }
  EXPECT_EQ(back.boundary_picks(), 1u);
}

TEST(LowerTriangularTable, RoundTripAndShapeChecks) {
  pgreedy::LowerTriangular c;
  for (const std::vector<double>& row : {std::vector<double>{2.0}, std::vector<double>{-1.0 / 3.0, 0.5},
                                        std::vector<double>{1e-17, 7.0, 3.0}}) {
    c.append_row(row);
  }
  const auto back = io::lower_triangular_from_table(io::lower_triangular_table(c));
  ASSERT_EQ(back.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j <= i; ++j) EXPECT_EQ(back(i, j), c(i, j));
  }
  auto t = io::lower_triangular_table(c);
  t.rows[0][2] = "1";
  EXPECT_THROW((void)io::lower_triangular_from_table(t), pgreedy::FormatError);
  t = io::lower_triangular_table(c);
  t.rows.pop_back();
  EXPECT_THROW((void)io::lower_triangular_from_table(t), pgreedy::FormatError);
  t = io::lower_triangular_table(c);
  t.rows[1][1] = "0";
  EXPECT_THROW((void)io::lower_triangular_from_table(t), pgreedy::FormatError);
}

TEST(KeyValues, ParseCommentsAndDuplicates) {
  std::istringstream is("# c\nm = 4\n\nmode=extended # trailing\n");
  const auto kv = io::read_key_values(is);
  EXPECT_EQ(kv.at("m"), "4");
  EXPECT_EQ(kv.at("mode"), "extended");
  std::istringstream dup("m=4\nm=5\n");
  EXPECT_THROW((void)io::read_key_values(dup), pgreedy::FormatError);
  std::istringstream bad("novalue\n");
  EXPECT_THROW((void)io::read_key_values(bad), pgreedy::FormatError);

  std::stringstream ss;
  io::write_key_values(ss, kv);
  EXPECT_EQ(io::read_key_values(ss), kv);
}

TEST(Files, WriteReadAndMissing) {
  const auto dir = std::filesystem::temp_directory_path() / "pgreedy_io_test";
  std::filesystem::create_directories(dir);
  io::write_csv_file(dir / "t.csv", io::CsvTable{{"x"}, {{"1"}}});
  EXPECT_EQ(io::read_csv_file(dir / "t.csv").rows.size(), 1u);
  EXPECT_THROW((void)io::read_text_file(dir / "missing.txt"), std::runtime_error);
  std::filesystem::remove_all(dir);
}

TEST(PlotScript, MentionsColumnsAndAxes) {
  const std::vector<std::string> header = {"N", "sigma", "rho"};
  const auto s = io::plot_script("trace.csv", "decay", "N", {"sigma", "rho"}, header, true);
  EXPECT_NE(s.find("trace.csv"), std::string::npos);
  EXPECT_NE(s.find("logscale"), std::string::npos);
  EXPECT_NE(s.find("using 1:2"), std::string::npos);
  EXPECT_NE(s.find("using 1:3"), std::string::npos);
}

}  // namespace
