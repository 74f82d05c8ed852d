#include <gtest/gtest.h>

#include "ectf/ectf.hpp"

using namespace ectf;

TEST(Table, AllCellsPassAtDefaultSize) {
  const auto r = run_table(1100);
  EXPECT_TRUE(r.skipped_rows.empty());
  for (const auto& inst : r.instances)
    for (const auto& c : inst.cells)
      EXPECT_TRUE(c.pass) << inst.row << " [" << inst.params << "] " << c.quantity << ": expected " << c.expected
                          << " measured " << c.measured;
  EXPECT_TRUE(r.pass());
}

TEST(Table, SpotValues) {
  const auto r = run_table(1100);
  auto find = [&](const std::string& row, const std::string& params) -> const TableInstance* {
    for (const auto& i : r.instances)
      if (i.row == row && i.params == params) return &i;
    return nullptr;
  };
  const auto* a4 = find("A(n)", "n=4");
  ASSERT_NE(a4, nullptr);
  EXPECT_EQ(a4->cells[0].measured, "16");
  EXPECT_EQ(a4->cells[1].measured, "5x16");
  EXPECT_EQ(a4->cells[2].measured, "2");
  const auto* c4 = find("C_{3k+1}", "k=1");
  ASSERT_NE(c4, nullptr);
  EXPECT_EQ(c4->cells[2].measured, "2");
  const auto* gt = find("G_T(m,k)", "T=T4 m=2 k=1");
  ASSERT_NE(gt, nullptr);
  EXPECT_EQ(gt->cells[0].measured, "32");
  EXPECT_EQ(gt->cells[2].measured, "2");
}

TEST(Table, SmallBudgetSkipsRows) {
  const auto r = run_table(20);
  EXPECT_FALSE(r.pass());
  EXPECT_FALSE(r.skipped_rows.empty());
}

TEST(Table, JsonIsByteIdenticalAcrossThreadCounts) {
  const auto one = to_json(run_table(300, {1})).dump();
  EXPECT_EQ(one, to_json(run_table(300, {1})).dump());
  EXPECT_EQ(one, to_json(run_table(300, {3})).dump());
}

TEST(Report, TextAndJson) {
  const auto r = certify(circular(3));
  const auto text = to_text(r, false);
  EXPECT_NE(text.find("name=adj_3 verdict=true witness=-\n"), std::string::npos);
  EXPECT_NE(text.find("name=e_3 verdict=false witness=\"extension A={0,1,2} B={}\""), std::string::npos);
  EXPECT_NE(text.find("name=circular verdict=true witness=\"n=3\""), std::string::npos);
  EXPECT_NE(to_text(r).find("millis="), std::string::npos);
  const auto j = to_json(r);
  EXPECT_EQ(j["is_3ectf"], false);
  EXPECT_EQ(j["circular"], 3);
  EXPECT_FALSE(j["properties"][0].contains("millis"));
  EXPECT_EQ(j.dump(), to_json(certify(circular(3), {3, {4}})).dump());
}
