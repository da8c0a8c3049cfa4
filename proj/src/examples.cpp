namespace abslog {}
