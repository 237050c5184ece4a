#include "sda/registry_data.hpp"

namespace sda::detail {

const std::vector<std::pair<std::string, std::vector<std::string>>>&
embedded_codes() {
  static const std::vector<std::pair<std::string, std::vector<std::string>>>
      codes = {
      {"z24",
       {
           "100000000000100101001001",
           "010000000000001100000111",
           "001000000000101001010100",
           "000100000010101110110110",
           "000010000010101011100100",
           "000001000000100010100101",
           "000000100010101011001111",
           "000000010010101001011001",
           "000000001010000111000100",
           "000000000100101010010111",
           "000000000001100011101011",
           "000000000000010100111100",
       }},
      {"x24",
       {
           "100000000000000111111010",
           "010000000000001101110000",
           "001000000000110110011001",
           "000100000000011110110100",
           "000010000000101010100100",
           "000001000000011000010110",
           "000000100000010001010000",
           "000000010000000111110011",
           "000000001000011101101001",
           "000000000100010000111111",
           "000000000010001000100010",
           "000000000001111100111101",
       }},
      {"y24",
       {
           "100000000000100110110110",
           "010000000000100101100100",
           "001000000010010010110101",
           "000100000010110010001110",
           "000010000010110001011001",
           "000001000000000101111101",
           "000000100010000101011000",
           "000000010010110010101010",
           "000000001010100001100111",
           "000000000110000111110111",
           "000000000001110011001000",
           "000000000000001010011000",
       }},
      {"c83",
       {
           "10000000000001000010011100100010",
           "01000000000001110001011100101110",
           "00100000000000010001000101001110",
           "00010000000000100010000101001101",
           "00001000000101010011011001010101",
           "00000100000101100011010101011001",
           "00000010000100000011001101011111",
           "00000001000100110000001101101111",
           "00000000100101100000000001101001",
           "00000000010101010011001101100110",
           "00000000001100110000000000110011",
           "00000000000011110000000000001111",
           "00000000000000001010010101011010",
           "00000000000000000101010101010101",
           "00000000000000000000111100001111",
           "00000000000000000000000011111111",
       }},
      {"c84",
       {
           "10000000000000100001000001011110",
           "01000000000000010001001101100001",
           "00100000000001110001010100000001",
           "00010000000001000001011000110001",
           "00001000000000110010001111110011",
           "00000100000000000001001111001100",
           "00000010000001100010011011111001",
           "00000001000001010010010111111010",
           "00000000100001100010001001001100",
           "00000000010001010010001001110000",
           "00000000001000110010001000010110",
           "00000000000100000010001011011010",
           "00000000000011110000000000001111",
           "00000000000000001001011010010110",
           "00000000000000000101010101010101",
           "00000000000000000000111111110000",
       }},
      {"c85",
       {
           "10000000000000100001000001011110",
           "01000000000000010001001101100001",
           "00100000000000101000000000111011",
           "00010000000000011000001100001011",
           "00001000000000111011010101100101",
           "00000100000000001000010101011010",
           "00000010000000111011001111000011",
           "00000001000000000010011001010110",
           "00000000100000110010000111100000",
           "00000000010000000010000111011100",
           "00000000001000111011010010000000",
           "00000000000100001011010001001100",
           "00000000000010100000001110100011",
           "00000000000001010000001110101100",
           "00000000000000000101010101010101",
           "00000000000000000000111111110000",
       }},
      };
  return codes;
}

}  // namespace sda::detail
