#include "doctest.h"

#include <algorithm>
#include <filesystem>
#include <map>
#include <set>

#include "floordiag/enumeration.hpp"
#include "floordiag/errors.hpp"
#include "test_support.hpp"

using namespace floordiag;
using testing::fd;

namespace {

std::vector<std::string> texts(const std::vector<FloorDiagram>& diagrams) {
  std::vector<std::string> out;
  for (const auto& d : diagrams) out.push_back(d.to_text());
  return out;
}

}  // namespace

TEST_SUITE("enumeration") {
  TEST_CASE("small connected families") {
    const auto cubics = texts(enumerate(DiagramQuery::connected(3, 0)));
    CHECK(cubics == std::vector<std::string>{"d=3; edges=(1,2,1);(2,3,1)", "d=3; edges=(1,2,1);(2,3,2)",
                                             "d=3; edges=(1,3,1);(2,3,1)"});
    CHECK(enumerate(DiagramQuery::connected(4, 0)).size() == 16);
    CHECK(texts(enumerate(DiagramQuery::connected(1, 0))) == std::vector<std::string>{"d=1; edges="});
    CHECK(enumerate(DiagramQuery::connected(2, 1)).empty());
  }

  TEST_CASE("connected counts by genus") {
    CHECK(count_connected(3, 1) == 1);
    CHECK(count_connected(4, 1) == 13);
    CHECK(count_connected(4, 2) == 5);
    CHECK(count_connected(4, 3) == 1);
    CHECK(count_connected(4, 4) == 0);
    CHECK(count_connected(5, 0) == 125);
  }

  TEST_CASE("every (degree, genus) and (degree, cogenus) stream matches the vertex-by-vertex oracle") {
    for (int d = 1; d <= 5; ++d) {
      std::map<int, std::vector<std::string>> by_genus, by_cogenus;
      for (const auto& raw : oracle::all_diagrams(d)) {
        if (raw.connected()) by_genus[raw.genus()].push_back(raw.text());
        by_cogenus[raw.cogenus()].push_back(raw.text());
      }
      for (auto& [g, expected] : by_genus) {
        std::sort(expected.begin(), expected.end());
        CAPTURE(d);
        CAPTURE(g);
        CHECK(texts(enumerate(DiagramQuery::connected(d, g))) == expected);
      }
      CHECK(enumerate(DiagramQuery::connected(d, max_genus(d) + 1)).empty());
      for (auto& [delta, expected] : by_cogenus) {
        std::sort(expected.begin(), expected.end());
        CAPTURE(d);
        CAPTURE(delta);
        CHECK(texts(enumerate(DiagramQuery::with_cogenus(d, delta))) == expected);
      }
    }
  }

  TEST_CASE("streams are sorted, duplicate free and revalidate") {
    for (int d = 1; d <= 6; ++d) {
      const auto list = texts(enumerate(DiagramQuery::with_cogenus(d, std::min(3, d * (d - 1) / 2))));
      CHECK(std::is_sorted(list.begin(), list.end()));
      CHECK(std::set<std::string>(list.begin(), list.end()).size() == list.size());
      for (const auto& t : list) CHECK(fd(t).to_text() == t);
    }
  }

  TEST_CASE("genus-zero counts are d^(d-2)") {
    for (int d = 2; d <= 7; ++d) CHECK(count_connected(d, 0) == power(d, d - 2));
  }

  TEST_CASE("filtered counts") {
    const std::vector<int> odd{1, 1, 2, 8, 46, 352};
    const std::vector<int> simple{1, 1, 2, 7, 36, 245};
    for (int d = 1; d <= 6; ++d) {
      CHECK(count_filtered(d, 0, DiagramFilter::parse("odd")) == odd[d - 1]);
      CHECK(count_filtered(d, 0, DiagramFilter::parse("simple")) == simple[d - 1]);
    }
    CHECK(count_filtered(5, 0, DiagramFilter::parse("heavy=4")) == 6);
  }

  TEST_CASE("chain filters give (b+1) d^(d-b-2)") {
    for (int d = 2; d <= 6; ++d) {
      for (int a = 1; a < d; ++a) {
        for (int b = 1; a + b <= d; ++b) {
          CAPTURE(d);
          CAPTURE(a);
          CAPTURE(b);
          const BigInt expected = b + 2 <= d ? BigInt((b + 1) * power(d, d - b - 2)) : BigInt(1);
          CHECK(count_filtered(d, 0, DiagramFilter::unit_chain(a, b)) == expected);
        }
      }
    }
  }

  TEST_CASE("filters agree with direct predicates on the oracle stream") {
    const auto odd = DiagramFilter::parse("odd");
    const auto capped = DiagramFilter::parse("maxw=2+contains=(1,2,1)");
    for (const auto& raw : oracle::all_diagrams(5)) {
      if (!raw.connected()) continue;
      bool all_odd = true, has12 = false;
      int top = 0;
      for (const auto& e : raw.edges) {
        all_odd = all_odd && e.weight % 2 == 1;
        has12 = has12 || (e.src == 1 && e.tgt == 2 && e.weight == 1);
        top = std::max(top, e.weight);
      }
      CHECK(odd.accepts(fd(raw)) == all_odd);
      CHECK(capped.accepts(fd(raw)) == (has12 && top <= 2));
    }
  }

  TEST_CASE("filter text round-trips through its key") {
    const auto f = DiagramFilter::parse("odd+maxw=3+sinks=2");
    CHECK(DiagramFilter::parse(f.key()).key() == f.key());
    CHECK(DiagramFilter::parse("").trivial());
    CHECK_THROWS_AS(DiagramFilter::parse("prime"), DomainError);
  }

  TEST_CASE("query validation") {
    DiagramQuery q;
    q.d = 0;
    q.genus = 0;
    CHECK_THROWS_AS(q.validate(), DomainError);
    DiagramQuery both;
    both.d = 3;
    both.genus = 0;
    both.cogenus = 1;
    CHECK_THROWS_AS(both.validate(), DomainError);
  }

  TEST_CASE("on-disk cache round-trips") {
    const auto dir = std::filesystem::temp_directory_path() / "floordiag_unit_cache";
    std::filesystem::remove_all(dir);
    const auto query = DiagramQuery::connected(5, 1, DiagramFilter::parse("odd"));
    std::vector<FloorDiagram> first;
    {
      DiagramStore store(dir);
      first = *store.get(query);
    }
    CHECK_FALSE(std::filesystem::is_empty(dir));
    DiagramStore reloaded(dir);
    CHECK(*reloaded.get(query) == first);
    CHECK(first == enumerate(query));
    std::filesystem::remove_all(dir);
  }

  TEST_CASE("sha256 of the empty string") {
    CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  }
}
