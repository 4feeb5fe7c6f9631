//! Number names from fixed tables, and the reverse parser.

const EN_0_19: [&str; 20] = [
    "zero", "one", "two", "three", "four", "five", "six", "seven", "eight", "nine", "ten", "eleven", "twelve",
    "thirteen", "fourteen", "fifteen", "sixteen", "seventeen", "eighteen", "nineteen",
];
const EN_DECADES: [(u32, &str); 8] = [
    (20, "twenty"),
    (30, "thirty"),
    (40, "forty"),
    (50, "fifty"),
    (60, "sixty"),
    (70, "seventy"),
    (80, "eighty"),
    (90, "ninety"),
];

const FR_0_16: [&str; 17] = [
    "zéro", "un", "deux", "trois", "quatre", "cinq", "six", "sept", "huit", "neuf", "dix", "onze", "douze", "treize",
    "quatorze", "quinze", "seize",
];

/// 0 to 99 in English, listed in full.
fn en_table() -> Vec<String> {
    let mut t: Vec<String> = EN_0_19.iter().map(|s| s.to_string()).collect();
    for (base, name) in EN_DECADES {
        t.push(name.to_string());
        for u in 1..10 {
            t.push(format!("{name}-{}", EN_0_19[u]));
        }
        assert_eq!(t.len() as u32, base + 10);
    }
    t
}

/// 0 to 99 in French with 1990 hyphenation: every element joined by "-".
fn fr_table() -> Vec<String> {
    let mut t: Vec<String> = FR_0_16.iter().map(|s| s.to_string()).collect();
    for u in 7..10 {
        t.push(format!("dix-{}", FR_0_16[u]));
    }
    for name in ["vingt", "trente", "quarante", "cinquante"] {
        t.push(name.to_string());
        t.push(format!("{name}-et-un"));
        for u in 2..10 {
            t.push(format!("{name}-{}", FR_0_16[u]));
        }
    }
    // 60 to 79 count on from soixante.
    t.push("soixante".into());
    t.push("soixante-et-un".into());
    for u in 2..=10 {
        t.push(format!("soixante-{}", FR_0_16[u]));
    }
    t.push("soixante-et-onze".into());
    for u in 12..=16 {
        t.push(format!("soixante-{}", FR_0_16[u]));
    }
    for u in 7..10 {
        t.push(format!("soixante-dix-{}", FR_0_16[u]));
    }
    // 80 to 99 count on from quatre-vingt, without "et".
    t.push("quatre-vingts".into());
    for u in 1..=16 {
        t.push(format!("quatre-vingt-{}", FR_0_16[u]));
    }
    for u in 7..10 {
        t.push(format!("quatre-vingt-dix-{}", FR_0_16[u]));
    }
    assert_eq!(t.len(), 100);
    t
}

pub fn english(n: u32) -> String {
    let t = en_table();
    match n {
        0..=99 => t[n as usize].clone(),
        _ if n.is_multiple_of(100) => format!("{} hundred", EN_0_19[(n / 100) as usize]),
        _ => format!("{} hundred {}", EN_0_19[(n / 100) as usize], t[(n % 100) as usize]),
    }
}

pub fn french(n: u32) -> String {
    let t = fr_table();
    let (h, r) = (n / 100, (n % 100) as usize);
    match (h, r) {
        (0, _) => t[r].clone(),
        (1, 0) => "cent".into(),
        (1, _) => format!("cent-{}", t[r]),
        (_, 0) => format!("{}-cents", FR_0_16[h as usize]),
        _ => format!("{}-cent-{}", FR_0_16[h as usize], t[r]),
    }
}

/// Value of spelled-out English or French numbers up to the thousands.
pub fn parse_words(s: &str) -> Option<u64> {
    let mut total = 0u64;
    let mut group = 0u64;
    let mut last = 0u64;
    for w in s.split([' ', '-']).filter(|w| !w.is_empty()) {
        let small = EN_0_19.iter().position(|x| *x == w).or_else(|| FR_0_16.iter().position(|x| *x == w));
        let decade = EN_DECADES.iter().find(|(_, x)| *x == w).map(|(v, _)| *v as u64);
        let fr_decade = match w {
            "vingt" | "vingts" => Some(20),
            "trente" => Some(30),
            "quarante" => Some(40),
            "cinquante" => Some(50),
            "soixante" => Some(60),
            _ => None,
        };
        match w {
            "et" => continue,
            "hundred" | "cent" | "cents" => {
                group = group.max(1) * 100;
            }
            "thousand" | "mille" => {
                total += group.max(1) * 1000;
                group = 0;
            }
            "vingt" | "vingts" if last == 4 => {
                group = group - 4 + 80;
            }
            _ => {
                let v = small.map(|i| i as u64).or(decade).or(fr_decade)?;
                group += v;
                last = v;
                continue;
            }
        }
        last = 0;
    }
    Some(total + group)
}

const EN_MONTHS: [&str; 12] = [
    "January", "February", "March", "April", "May", "June", "July", "August", "September", "October", "November",
    "December",
];
const FR_MONTHS: [&str; 12] = [
    "janvier", "février", "mars", "avril", "mai", "juin", "juillet", "août", "septembre", "octobre", "novembre",
    "décembre",
];
const EN_DAYS: [&str; 7] = ["Saturday", "Sunday", "Monday", "Tuesday", "Wednesday", "Thursday", "Friday"];
const FR_DAYS: [&str; 7] = ["samedi", "dimanche", "lundi", "mardi", "mercredi", "jeudi", "vendredi"];

/// Zeller's congruence: 0 is Saturday.
pub fn zeller(y: i32, m: u32, d: u32) -> usize {
    let (y, m) = if m < 3 { (y - 1, m + 12) } else { (y, m) };
    let (k, j) = (y.rem_euclid(100), y.div_euclid(100));
    ((d as i32 + (13 * (m as i32 + 1)) / 5 + k + k / 4 + j / 4 + 5 * j).rem_euclid(7)) as usize
}

/// Full natural wording of a date and time, field by field.
pub fn full_date(lang: &str, y: i32, m: u32, d: u32, h: u32, min: u32, s: u32) -> String {
    let wd = zeller(y, m, d);
    if lang == "en" {
        format!("on {}, {} {d}, {y} at {h}:{min:02}:{s:02}", EN_DAYS[wd], EN_MONTHS[m as usize - 1])
    } else {
        let day = if d == 1 { "1er".to_string() } else { d.to_string() };
        format!("le {} {day} {} {y} à {h} h {min} min {s} s", FR_DAYS[wd], FR_MONTHS[m as usize - 1])
    }
}
