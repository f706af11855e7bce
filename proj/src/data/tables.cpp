#include "data/tables.hpp"

// Root and matrix tables for the exceptional types. Roots use a compact
// code: "a-b" is x_a - x_b, "a+b" is x_a + x_b, and "hS" is one half of the
// signed sum of all eight coordinates with a plus sign exactly on the
// digits listed in S.

namespace idealarr::data {

const StringRows& e8_root_codes() {
  static const StringRows rows = {
    {"h1", "h178", "h168", "h158", "h148", "h138", "h137", "h136", "h135", "h125", "h124", "h12478", "h12468", "h12458", "h12457", "h12456", "h1245678", "h1235678", "h1234678"},
    {"2-3", "2-4", "2-5", "2-6", "2-7", "2-8", "2+7", "2+6", "2+5", "2+4", "2+3", "h123", "h12378", "h12368", "h12358", "h12348", "h12347", "h12346", "h12345", "h1234578", "h1234568", "h1234567", "1-8", "1+7", "1+6", "1+5", "1+4", "1+3", "1+2"},
    {"3-4", "3-5", "3-6", "3-7", "3-8", "3+7", "3+6", "3+5", "3+4", "h134", "h13478", "h13468", "h13458", "h13457", "h13456", "h1345678", "1-2", "1-3", "1-4", "1-5", "1-6", "1-7", "1+8"},
    {"4-5", "4-6", "4-7", "4-8", "4+7", "4+6", "4+5", "h145", "h14578", "h14568", "h14567", "h13567", "h13467"},
    {"5-6", "5-7", "5-8", "5+7", "5+6", "h156", "h15678", "h14678", "h13678", "h13578", "h13568"},
    {"6-7", "6-8", "6+7", "h167", "h157", "h147", "h146"},
    {"7-8"},
    {"7+8", "6+8", "5+8", "4+8", "3+8", "2+8", "h128", "h127", "h126", "h12678", "h12578", "h12568", "h12567", "h12467", "h12367", "h12357", "h12356"},
  };
  return rows;
}

const MatrixTable& f4_matrices() {
  static const MatrixTable table = {
    {{"1", "0", "0", "0"}, {"0", "1", "0", "0"}, {"0", "0", "1", "0"}, {"0", "0", "0", "1"}},
    {{"1", "1", "1", "1"}, {"0", "1", "0", "0"}, {"0", "1", "1", "0"}, {"0", "1", "1", "1"}},
    {{"1", "0", "0"}, {"1", "1", "1"}, {"0", "0", "1"}},
    {{"1", "-1/2", "-1"}, {"1", "1", "-1"}, {"1/2", "1/2", "1"}},
    {{"1", "0", "-2"}, {"0", "1", "2"}, {"0", "0", "1"}},
    {{"1", "0", "0"}, {"0", "1", "0"}, {"-1/2", "1/2", "1"}},
    {{"1", "1"}, {"0", "1"}},
    {{"1", "0"}, {"2", "1"}},
    {{"1"}},
    {{"1"}},
    {{"1"}},
    {{"1"}},
  };
  return table;
}

const MatrixTable& e6_matrices() {
  static const MatrixTable table = {
    {{"1", "0", "0", "0", "0", "0"}, {"0", "1", "0", "0", "0", "0"}, {"0", "0", "1", "0", "0", "0"}, {"0", "0", "0", "1", "0", "0"}, {"0", "0", "0", "0", "1", "0"}, {"0", "0", "0", "0", "0", "1"}},
    {{"1", "0", "0", "0", "0", "0"}, {"0", "1", "0", "0", "0", "0"}, {"0", "1", "1", "0", "0", "0"}, {"1", "1", "1", "1", "0", "1"}, {"1", "1", "1", "1", "1", "1"}, {"1", "0", "0", "0", "0", "1"}},
    {{"1", "0", "0", "0", "0"}, {"0", "1", "0", "0", "0"}, {"-1", "1", "1", "-1", "-1"}, {"-1", "1", "1", "1", "-1"}, {"1", "1", "1", "1", "1"}},
    {{"1", "-1/2", "-1/4", "-1/2", "-1/4"}, {"1", "1", "-1", "-1/2", "1/2"}, {"2", "2", "1", "-1", "1"}, {"1", "1", "1/2", "1", "1/2"}, {"2", "-4", "-2", "-1", "1"}},
    {{"1", "0", "0", "-1/2", "0"}, {"0", "1", "0", "0", "0"}, {"0", "2", "1", "2", "0"}, {"0", "0", "0", "1", "0"}, {"4", "2", "0", "-2", "1"}},
    {{"1", "-1/4", "-1/8", "-1/4"}, {"-2", "1", "0", "0"}, {"-4", "2", "1", "0"}, {"0", "1", "1/2", "1"}},
    {{"1", "0", "-1/2"}, {"0", "1", "1"}, {"0", "0", "1"}},
    {{"1", "0", "0"}, {"0", "1", "0"}, {"-2", "1", "1"}},
    {{"1", "0"}, {"2", "1"}},
    {{"1"}},
    {{"1"}},
    {{"1"}},
  };
  return table;
}

const MatrixTable& e7_matrices() {
  static const MatrixTable table = {
    {{"1", "0", "0", "0", "0", "0", "0"}, {"0", "1", "0", "0", "0", "0", "0"}, {"0", "0", "1", "0", "0", "0", "0"}, {"0", "0", "0", "1", "0", "0", "0"}, {"0", "0", "0", "0", "1", "0", "0"}, {"0", "0", "0", "0", "0", "1", "0"}, {"0", "0", "0", "0", "0", "0", "1"}},
    {{"1", "0", "0", "0", "0", "0", "0"}, {"0", "1", "0", "0", "0", "0", "0"}, {"0", "1", "1", "0", "0", "0", "0"}, {"0", "1", "1", "1", "0", "0", "0"}, {"1", "1", "1", "1", "1", "0", "1"}, {"1", "1", "1", "1", "1", "1", "1"}, {"1", "0", "0", "0", "0", "0", "1"}},
    {{"1", "0", "0", "0", "0", "0"}, {"0", "1", "0", "0", "0", "0"}, {"0", "1", "1", "0", "0", "0"}, {"-1", "1", "1", "1", "-1", "-1"}, {"-1", "1", "1", "1", "1", "-1"}, {"1", "1", "1", "1", "1", "1"}},
    {{"1", "-1/2", "-1/2", "-1/4", "-1/2", "-1/4"}, {"0", "1", "0", "0", "0", "0"}, {"1", "1", "1", "-1", "-1/2", "1/2"}, {"2", "2", "2", "1", "-1", "1"}, {"1", "1", "1", "1/2", "1", "1/2"}, {"2", "-4", "-4", "-2", "-1", "1"}},
    {{"1", "0", "0", "0", "-1/2", "0"}, {"-2/3", "1", "-1/3", "0", "1/3", "-1/6"}, {"-2", "3", "1", "0", "1", "-1/2"}, {"-2", "3", "1", "1", "3", "-1/2"}, {"0", "0", "0", "0", "1", "0"}, {"4", "6", "2", "0", "-2", "1"}},
    {{"1", "-3/8", "-1/8", "-1/8", "-1/4", "0"}, {"0", "1", "0", "0", "0", "0"}, {"0", "3", "1", "-1", "-2", "0"}, {"0", "3", "1", "1", "-2", "0"}, {"0", "3/2", "1/2", "1/2", "1", "0"}, {"8", "-9", "-1", "-1", "-2", "1"}},
    {{"1", "0", "0", "0", "0"}, {"4/3", "1", "0", "0", "0"}, {"16", "6", "1", "0", "-2"}, {"-8", "0", "0", "1", "2"}, {"-4", "0", "0", "0", "1"}},
    {{"1", "0", "0", "0", "0"}, {"4/3", "1", "0", "0", "0"}, {"8", "6", "1", "0", "0"}, {"0", "0", "0", "1", "0"}, {"-8", "-3", "-1/2", "1/2", "1"}},
    {{"1", "0", "1/8", "1/8"}, {"2/3", "1", "1/12", "1/12"}, {"-8", "0", "1", "-1"}, {"-8", "0", "1", "1"}},
    {{"1", "3/2", "0", "1/8"}, {"0", "1", "0", "0"}, {"-8", "-12", "1", "0"}, {"0", "0", "0", "1"}},
    {{"1", "0", "0"}, {"-12", "1", "1"}, {"-12", "0", "1"}},
    {{"1", "0", "0"}, {"0", "1", "0"}, {"-12", "1", "1"}},
    {{"1", "1/12"}, {"0", "1"}},
    {{"1", "0"}, {"12", "1"}},
    {{"1"}},
    {{"1"}},
    {{"1"}},
    {{"1"}},
  };
  return table;
}

const MatrixTable& e8_matrices() {
  static const MatrixTable table = {
    {{"1", "0", "0", "0", "0", "0", "0", "0"}, {"0", "1", "0", "0", "0", "0", "0", "0"}, {"0", "0", "1", "0", "0", "0", "0", "0"}, {"0", "0", "0", "1", "0", "0", "0", "0"}, {"0", "0", "0", "0", "1", "0", "0", "0"}, {"0", "0", "0", "0", "0", "1", "0", "0"}, {"0", "0", "0", "0", "0", "0", "1", "0"}, {"0", "0", "0", "0", "0", "0", "0", "1"}},
    {{"1", "0", "0", "0", "0", "0", "0", "0"}, {"0", "1", "0", "0", "0", "0", "0", "0"}, {"0", "1", "1", "0", "0", "0", "0", "0"}, {"0", "1", "1", "1", "0", "0", "0", "0"}, {"0", "1", "1", "1", "1", "0", "0", "0"}, {"1", "1", "1", "1", "1", "1", "0", "1"}, {"1", "1", "1", "1", "1", "1", "1", "1"}, {"1", "0", "0", "0", "0", "0", "0", "1"}},
    {{"1", "0", "0", "0", "0", "0", "0"}, {"0", "1", "0", "0", "0", "0", "0"}, {"0", "1", "1", "0", "0", "0", "0"}, {"0", "1", "1", "1", "0", "0", "0"}, {"-1", "1", "1", "1", "1", "-1", "-1"}, {"-1", "1", "1", "1", "1", "1", "-1"}, {"1", "1", "1", "1", "1", "1", "1"}},
    {{"1", "-1/2", "-1/2", "-1/2", "-1/4", "-1/2", "-1/4"}, {"0", "1", "0", "0", "0", "0", "0"}, {"0", "1", "1", "0", "0", "0", "0"}, {"1", "1", "1", "1", "-1", "-1/2", "1/2"}, {"2", "2", "2", "2", "1", "-1", "1"}, {"1", "1", "1", "1", "1/2", "1", "1/2"}, {"2", "-4", "-4", "-4", "-2", "-1", "1"}},
    {{"1", "0", "0", "0", "0", "-1/2", "0"}, {"0", "1", "0", "0", "0", "0", "0"}, {"-2/3", "1", "1", "-1/3", "0", "1/3", "-1/6"}, {"-2", "3", "3", "1", "0", "1", "-1/2"}, {"-2", "3", "3", "1", "1", "3", "-1/2"}, {"0", "0", "0", "0", "0", "1", "0"}, {"4", "6", "6", "2", "0", "-2", "1"}},
    {{"1", "-3/8", "-3/16", "-1/8", "-1/8", "-1/4", "-1/32"}, {"2/3", "1", "-3/4", "-1/12", "-1/12", "-1/6", "1/12"}, {"4/3", "2", "1", "-1/6", "-1/6", "-1/3", "1/6"}, {"2", "3", "3/2", "1", "-3/2", "-3", "1/4"}, {"2", "3", "3/2", "1", "1", "-3", "1/4"}, {"1", "3/2", "3/4", "1/2", "1/2", "1", "1/8"}, {"8", "-18", "-9", "-1", "-1", "-2", "1"}},
    {{"1", "3/4", "0", "0", "0", "0", "1/16"}, {"0", "1", "0", "0", "0", "0", "0"}, {"8/3", "4", "1", "0", "0", "0", "1/6"}, {"16", "18", "3", "1", "0", "-2", "1"}, {"-8", "-6", "0", "0", "1", "2", "-1/2"}, {"-4", "-3", "0", "0", "0", "1", "-1/4"}, {"0", "12", "0", "0", "0", "0", "1"}},
    {{"1", "0", "0", "0", "0", "0", "1/16"}, {"0", "1", "0", "0", "0", "0", "1/12"}, {"8/3", "2", "1", "0", "0", "0", "1/3"}, {"0", "6", "3", "1", "1", "2", "1/2"}, {"0", "0", "0", "0", "1", "0", "0"}, {"-8", "-3", "-3/2", "-1/2", "1/2", "1", "-3/4"}, {"0", "0", "0", "0", "0", "0", "1"}},
    {{"1", "0", "0", "1/16", "1/8", "1/16"}, {"0", "1", "0", "0", "0", "1/12"}, {"4/3", "2", "1", "1/12", "1/6", "1/4"}, {"-16", "0", "0", "1", "-2", "-1"}, {"-8", "0", "0", "1/2", "1", "-1/2"}, {"0", "0", "0", "0", "0", "1"}},
    {{"1", "3/2", "3/4", "0", "1/8", "-1/8"}, {"-1/3", "1", "-1/4", "0", "-1/24", "1/24"}, {"-2/3", "2", "1", "0", "-1/12", "1/12"}, {"-16/3", "-8", "-4", "1", "4/3", "-4/3"}, {"-4", "-6", "-3", "0", "1", "-1"}, {"4", "6", "3", "0", "1/2", "1"}},
    {{"1", "0", "0", "0", "0", "1/4"}, {"-1/3", "1", "0", "0", "0", "-1/12"}, {"2/3", "0", "1", "0", "0", "1/6"}, {"-16/3", "0", "-8", "1", "4/3", "-8/3"}, {"-4", "0", "-6", "0", "1", "-2"}, {"0", "0", "0", "0", "0", "1"}},
    {{"1", "-3", "0", "0", "0", "0"}, {"0", "1", "0", "0", "0", "0"}, {"0", "0", "1", "1/8", "1/6", "-1/6"}, {"0", "0", "0", "1", "0", "0"}, {"-8", "24", "-6", "3/4", "1", "-1"}, {"0", "0", "-6", "3/4", "1", "1"}},
    {{"1", "-3", "0", "0", "0"}, {"0", "1", "0", "0", "0"}, {"8/3", "-8", "1", "1/4", "1/6"}, {"16/3", "-16", "0", "1", "2/3"}, {"8", "-24", "0", "0", "1"}},
    {{"1", "-3", "-3/4", "-3/16", "0"}, {"0", "1", "0", "0", "0"}, {"4/3", "-4", "1", "-1/4", "0"}, {"16/3", "-16", "4", "1", "4/3"}, {"0", "0", "0", "0", "1"}},
    {{"1", "-6", "0", "-1/4"}, {"1/6", "1", "0", "1/24"}, {"2/3", "-4", "1", "-1/6"}, {"4", "-24", "0", "1"}},
    {{"1", "0", "0", "1/4"}, {"0", "1", "0", "1/24"}, {"2/3", "0", "1", "1/6"}, {"0", "0", "0", "1"}},
    {{"1", "6", "0", "1/4"}, {"0", "1", "0", "0"}, {"2/3", "4", "1", "1/6"}, {"0", "24", "0", "1"}},
    {{"1", "0", "3/2", "0"}, {"0", "1", "0", "0"}, {"0", "0", "1", "0"}, {"4", "24", "6", "1"}},
    {{"1", "0", "3/2"}, {"-1/6", "1", "-1/4"}, {"0", "0", "1"}},
    {{"1", "-6", "3/2"}, {"0", "1", "0"}, {"0", "0", "1"}},
    {{"1", "1/4"}, {"0", "1"}},
    {{"1", "1/4"}, {"0", "1"}},
    {{"1", "0"}, {"4", "1"}},
    {{"1", "0"}, {"4", "1"}},
    {{"1"}},
    {{"1"}},
    {{"1"}},
    {{"1"}},
    {{"1"}},
    {{"1"}},
  };
  return table;
}

}  // namespace idealarr::data
