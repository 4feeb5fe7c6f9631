mod common;

#[test]
fn answers_fill_the_gap() {
    let (checked, failures) = common::questions::check(100..160);
    assert!(checked > 60);
    assert!(failures.is_empty(), "{}", failures.join("\n"));
}
