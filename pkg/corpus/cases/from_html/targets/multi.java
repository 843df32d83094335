public class Pair {
    CharSequence first;
    CharSequence second;

    void refresh(String a, String b) {
        first = Html.fromHtml(a);
        second = Html.fromHtml(b);
    }
}
