use isoparam::isopoly::debug_trace_m1;

#[test]
fn dbg() {
    debug_trace_m1();
}
